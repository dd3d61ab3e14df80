#include <fstream>
#include <sstream>
#include <stdexcept>

#include "risqaoa/pipeline.hpp"

namespace risq {

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_run_artifacts(const std::filesystem::path& out_dir, const RunResult& result) {
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir / "report.json", render_run_report(result));

  std::ostringstream edges;
  write_edge_list(edges, result.hamiltonian);
  write_text_file(out_dir / "hamiltonian_edges.txt", edges.str());

  if (result.qaoa) {
    std::ostringstream trace;
    write_trace_csv(trace, result.qaoa->trace);
    write_text_file(out_dir / "trace.csv", trace.str());
  }
  if (result.pattern) {
    std::ostringstream csv;
    write_pattern_csv(csv, *result.pattern);
    write_text_file(out_dir / "pattern.csv", csv.str());
    std::ostringstream pgm;
    write_pattern_pgm(pgm, *result.pattern);
    write_text_file(out_dir / "pattern.pgm", pgm.str());
  }
}

}  // namespace risq
