#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "risqaoa/state.hpp"

#if defined(RISQAOA_HAVE_LIBMVEC)
// Exposes glibc's SIMD variants of sin/cos to the vectorizer.
#pragma omp declare simd notinbranch
extern "C" double sin(double);
#pragma omp declare simd notinbranch
extern "C" double cos(double);
#endif

namespace risq {
namespace {

// Fixed reduction granularity; independent of the thread count.
constexpr std::size_t kChunk = std::size_t{1} << 14;
// Qubits below this index are rotated inside one cache-resident block.
constexpr std::size_t kBlockQubits = 12;

template <class T, class F>
T chunked_sum(std::size_t dim, F partial) {
  const std::size_t chunks = (dim + kChunk - 1) / kChunk;
  std::vector<T> parts(chunks, T{});
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = c * kChunk;
    parts[c] = partial(lo, std::min(dim, lo + kChunk));
  }
  T total{};
  for (const T& p : parts) total += p;
  return total;
}

// (c - i s X) acting on the pair (a, b) = (amp[bit=0], amp[bit=1]).
inline void rotate_pair(Amplitude& a, Amplitude& b, double c, double s) {
  const double ar = a.real(), ai = a.imag();
  const double br = b.real(), bi = b.imag();
  a = Amplitude(c * ar + s * bi, c * ai - s * br);
  b = Amplitude(c * br + s * ai, c * bi - s * ar);
}

void check_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("state and diagonal dimensions differ");
}

// Two-pass decomposition used by the fused kernels. Pass one walks contiguous
// blocks holding qubits [0, a). Pass two gathers tiles made of `low`
// contiguous amplitudes times every combination of the qubits [a, n), so the
// high qubits become local bits [low, low + n - a) of a small buffer.
constexpr std::size_t kFusedBlockQubits = 13;
constexpr std::size_t kTileQubits = 14;
constexpr std::size_t kLanes = 8;

struct TileLayout {
  std::size_t n = 0;
  std::size_t a = 0;    // qubits handled in pass one
  std::size_t low = 0;  // contiguous bits per tile run
  std::size_t high = 0; // n - a

  explicit TileLayout(std::size_t qubits) : n(qubits) {
    a = std::min(n, kFusedBlockQubits);
    high = n - a;
    low = high == 0 ? 0 : (high < kTileQubits ? std::min(a, kTileQubits - high) : 0);
  }
  std::size_t block() const { return std::size_t{1} << a; }
  std::size_t blocks() const { return std::size_t{1} << (n - a); }
  std::size_t tile() const { return std::size_t{1} << (low + high); }
  std::size_t tiles() const { return std::size_t{1} << (a - low); }

  template <class T>
  void gather(const T* src, std::size_t t, T* dst) const {
    const std::size_t run = std::size_t{1} << low;
    const std::size_t runs = std::size_t{1} << high;
    for (std::size_t h = 0; h < runs; ++h) {
      std::memcpy(dst + (h << low), src + ((t << low) | (h << a)), run * sizeof(T));
    }
  }
  template <class T>
  void scatter(const T* src, std::size_t t, T* dst) const {
    const std::size_t run = std::size_t{1} << low;
    const std::size_t runs = std::size_t{1} << high;
    for (std::size_t h = 0; h < runs; ++h) {
      std::memcpy(dst + ((t << low) | (h << a)), src + (h << low), run * sizeof(T));
    }
  }
};

// Calls body(i0, i1) for every pair differing in bit q. Short strides use a
// flat loop so the per-run overhead does not dominate.
template <class Body>
inline void for_each_pair(std::size_t size, std::size_t q, Body&& body) {
  const std::size_t stride = std::size_t{1} << q;
  if (stride >= kLanes) {
    for (std::size_t start = 0; start < size; start += 2 * stride) {
      for (std::size_t k = start; k < start + stride; ++k) body(k, k + stride);
    }
  } else {
    const std::size_t half = size / 2;
    for (std::size_t t = 0; t < half; ++t) {
      const std::size_t i0 = ((t >> q) << (q + 1)) | (t & (stride - 1));
      body(i0, i0 + stride);
    }
  }
}

// Rotates local qubits [q0, q1) of a buffer of `size` amplitudes.
void rotate_local(Amplitude* buf, std::size_t size, std::size_t q0, std::size_t q1, double c,
                  double s) {
  for (std::size_t q = q0; q < q1; ++q) {
    for_each_pair(size, q, [&](std::size_t k0, std::size_t k1) { rotate_pair(buf[k0], buf[k1], c, s); });
  }
}

// Accumulates <lhs| X_q |rhs> for local qubits [q0, q1) and then rotates both
// buffers on that qubit. Rotations on other qubits commute with X_q, so the
// order in which qubits are visited does not change the element. Partial sums
// are kept per lane (k mod kLanes) so the loop vectorizes without reassociation.
Amplitude element_and_rotate_local(Amplitude* lhs, Amplitude* rhs, std::size_t size,
                                   std::size_t q0, std::size_t q1, double c, double s) {
  double re[kLanes] = {}, im[kLanes] = {};
  auto pair = [&](std::size_t k0, std::size_t k1, std::size_t lane) {
    const double l0r = lhs[k0].real(), l0i = lhs[k0].imag();
    const double l1r = lhs[k1].real(), l1i = lhs[k1].imag();
    const double r0r = rhs[k0].real(), r0i = rhs[k0].imag();
    const double r1r = rhs[k1].real(), r1i = rhs[k1].imag();
    re[lane] += l0r * r1r + l0i * r1i + l1r * r0r + l1i * r0i;
    im[lane] += l0r * r1i - l0i * r1r + l1r * r0i - l1i * r0r;
    lhs[k0] = Amplitude(c * l0r + s * l1i, c * l0i - s * l1r);
    lhs[k1] = Amplitude(c * l1r + s * l0i, c * l1i - s * l0r);
    rhs[k0] = Amplitude(c * r0r + s * r1i, c * r0i - s * r1r);
    rhs[k1] = Amplitude(c * r1r + s * r0i, c * r1i - s * r0r);
  };
  for (std::size_t q = q0; q < q1; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    if (stride >= kLanes) {
      for (std::size_t start = 0; start < size; start += 2 * stride) {
        for (std::size_t k = start; k < start + stride; k += kLanes) {
          for (std::size_t j = 0; j < kLanes; ++j) pair(k + j, k + j + stride, j);
        }
      }
    } else {
      for_each_pair(size, q, [&](std::size_t k0, std::size_t k1) { pair(k0, k1, k0 & (kLanes - 1)); });
    }
  }
  Amplitude acc{};
  for (std::size_t j = 0; j < kLanes; ++j) acc += Amplitude(re[j], im[j]);
  return acc;
}

// out[i] = exp(i scale d[i]). Vectorized through libmvec when available.
void fill_phases(const double* d, double scale, std::size_t size, Amplitude* out) {
  constexpr std::size_t kBatch = 512;
  double c[kBatch], s[kBatch];
  for (std::size_t lo = 0; lo < size; lo += kBatch) {
    const std::size_t m = std::min(kBatch, size - lo);
    // Separate loops: a fused sincos call has no SIMD variant.
#pragma omp simd
    for (std::size_t i = 0; i < m; ++i) c[i] = ::cos(scale * d[lo + i]);
#pragma omp simd
    for (std::size_t i = 0; i < m; ++i) s[i] = ::sin(scale * d[lo + i]);
    for (std::size_t i = 0; i < m; ++i) out[lo + i] = Amplitude(c[i], s[i]);
  }
}

// buf[i] *= table[i] (sign +1) or conj(table[i]) (sign -1).
void phase_local(Amplitude* buf, std::size_t size, const Amplitude* table, double sign) {
  for (std::size_t i = 0; i < size; ++i) {
    const double pc = table[i].real(), ps = sign * table[i].imag();
    const double ar = buf[i].real(), ai = buf[i].imag();
    buf[i] = Amplitude(ar * pc - ai * ps, ar * ps + ai * pc);
  }
}

// Returns sum conj(lhs) d rhs over the buffer, then multiplies both by conj(table).
Amplitude diagonal_and_unphase_local(Amplitude* lhs, Amplitude* rhs, const double* d,
                                     std::size_t size, const Amplitude* table) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double lr = lhs[i].real(), li = lhs[i].imag();
    const double rr = rhs[i].real(), ri = rhs[i].imag();
    re += d[i] * (lr * rr + li * ri);
    im += d[i] * (lr * ri - li * rr);
    const double pc = table[i].real(), ps = -table[i].imag();
    lhs[i] = Amplitude(lr * pc - li * ps, lr * ps + li * pc);
    rhs[i] = Amplitude(rr * pc - ri * ps, rr * ps + ri * pc);
  }
  return {re, im};
}

template <class T>
T ordered_sum(const std::vector<T>& parts) {
  T total{};
  for (const T& p : parts) total += p;
  return total;
}

void check_layer_dims(std::size_t dim, std::size_t n) {
  if (dim != (std::size_t{1} << n)) throw std::invalid_argument("state dimension is not 2^n");
}

// Phase factors exp(-i gamma diag) come from `table` when given, otherwise
// they are computed per block into scratch space.
void layer_impl(std::span<Amplitude> psi, const TileLayout& lay, std::span<const double> diag,
                const Amplitude* table, double gamma, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::size_t block = lay.block();

#pragma omp parallel
  {
    std::vector<Amplitude> scratch(table ? 0 : block);
#pragma omp for schedule(static)
    for (std::size_t b = 0; b < lay.blocks(); ++b) {
      const std::size_t off = b * block;
      const Amplitude* t = table ? table + off : scratch.data();
      if (!table) fill_phases(diag.data() + off, -gamma, block, scratch.data());
      phase_local(psi.data() + off, block, t, 1.0);
      rotate_local(psi.data() + off, block, 0, lay.a, c, s);
    }
  }
  if (lay.high == 0) return;

#pragma omp parallel
  {
    std::vector<Amplitude> buf(lay.tile());
#pragma omp for schedule(static)
    for (std::size_t t = 0; t < lay.tiles(); ++t) {
      lay.gather(psi.data(), t, buf.data());
      rotate_local(buf.data(), buf.size(), lay.low, lay.low + lay.high, c, s);
      lay.scatter(buf.data(), t, psi.data());
    }
  }
}

kernels::AdjointLayerTerms adjoint_impl(std::span<Amplitude> lambda, std::span<Amplitude> psi,
                                        const TileLayout& lay, std::span<const double> diag,
                                        const Amplitude* table, double gamma, double beta) {
  const double c = std::cos(beta);
  const double s = -std::sin(beta);
  const std::size_t block = lay.block();
  const bool single_pass = lay.high == 0;

  std::vector<Amplitude> mix_a(lay.blocks()), diag_a(single_pass ? lay.blocks() : 0);
#pragma omp parallel
  {
    std::vector<Amplitude> scratch(single_pass && !table ? block : 0);
#pragma omp for schedule(static)
    for (std::size_t b = 0; b < lay.blocks(); ++b) {
      const std::size_t off = b * block;
      Amplitude* l = lambda.data() + off;
      Amplitude* p = psi.data() + off;
      mix_a[b] = element_and_rotate_local(l, p, block, 0, lay.a, c, s);
      if (single_pass) {
        const Amplitude* t = table ? table + off : scratch.data();
        if (!table) fill_phases(diag.data() + off, -gamma, block, scratch.data());
        diag_a[b] = diagonal_and_unphase_local(l, p, diag.data() + off, block, t);
      }
    }
  }
  kernels::AdjointLayerTerms out;
  out.mixer = ordered_sum(mix_a);
  if (single_pass) {
    out.diagonal = ordered_sum(diag_a);
    return out;
  }

  std::vector<Amplitude> mix_b(lay.tiles()), diag_b(lay.tiles());
#pragma omp parallel
  {
    std::vector<Amplitude> lbuf(lay.tile()), pbuf(lay.tile()), tbuf(lay.tile());
    std::vector<double> dbuf(lay.tile());
#pragma omp for schedule(static)
    for (std::size_t t = 0; t < lay.tiles(); ++t) {
      lay.gather(lambda.data(), t, lbuf.data());
      lay.gather(psi.data(), t, pbuf.data());
      lay.gather(diag.data(), t, dbuf.data());
      if (table) {
        lay.gather(table, t, tbuf.data());
      } else {
        fill_phases(dbuf.data(), -gamma, dbuf.size(), tbuf.data());
      }
      mix_b[t] = element_and_rotate_local(lbuf.data(), pbuf.data(), lbuf.size(), lay.low,
                                          lay.low + lay.high, c, s);
      diag_b[t] = diagonal_and_unphase_local(lbuf.data(), pbuf.data(), dbuf.data(), lbuf.size(),
                                             tbuf.data());
      lay.scatter(lbuf.data(), t, lambda.data());
      lay.scatter(pbuf.data(), t, psi.data());
    }
  }
  out.mixer += ordered_sum(mix_b);
  out.diagonal = ordered_sum(diag_b);
  return out;
}

}  // namespace

QaoaState uniform_state(std::size_t n) {
  QaoaState s;
  s.n = n;
  const std::size_t dim = std::size_t{1} << n;
  s.amplitudes.assign(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return s;
}

double norm_squared(std::span<const Amplitude> psi) {
  return chunked_sum<double>(psi.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::norm(psi[i]);
    return acc;
  });
}

namespace kernels {

void apply_cost_phase(std::span<Amplitude> psi, std::span<const double> diag, double gamma) {
  check_dim(psi.size(), diag.size());
  const std::size_t dim = psi.size();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < dim; ++i) {
    const double angle = -gamma * diag[i];
    psi[i] *= Amplitude(std::cos(angle), std::sin(angle));
  }
}

void apply_mixer(std::span<Amplitude> psi, std::size_t n, double beta) {
  const std::size_t dim = psi.size();
  if (dim != (std::size_t{1} << n)) throw std::invalid_argument("state dimension is not 2^n");
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::size_t low = std::min(n, kBlockQubits);
  const std::size_t block = std::size_t{1} << low;
  const std::size_t blocks = dim / block;

#pragma omp parallel for schedule(static)
  for (std::size_t b = 0; b < blocks; ++b) {
    Amplitude* base = psi.data() + b * block;
    for (std::size_t q = 0; q < low; ++q) {
      const std::size_t stride = std::size_t{1} << q;
      for (std::size_t start = 0; start < block; start += 2 * stride) {
        for (std::size_t k = start; k < start + stride; ++k) {
          rotate_pair(base[k], base[k + stride], c, s);
        }
      }
    }
  }

  const std::size_t half = dim / 2;
  for (std::size_t q = low; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << q;
#pragma omp parallel for schedule(static)
    for (std::size_t t = 0; t < half; ++t) {
      const std::size_t i0 = ((t >> q) << (q + 1)) | (t & (stride - 1));
      rotate_pair(psi[i0], psi[i0 + stride], c, s);
    }
  }
}

double diagonal_expectation(std::span<const Amplitude> psi, std::span<const double> diag) {
  check_dim(psi.size(), diag.size());
  return chunked_sum<double>(psi.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::norm(psi[i]) * diag[i];
    return acc;
  });
}

Amplitude mixer_matrix_element(std::span<const Amplitude> lhs, std::span<const Amplitude> rhs,
                               std::size_t n) {
  check_dim(lhs.size(), rhs.size());
  if (lhs.size() != (std::size_t{1} << n)) throw std::invalid_argument("state dimension is not 2^n");
  return chunked_sum<Amplitude>(lhs.size(), [&](std::size_t lo, std::size_t hi) {
    Amplitude acc{};
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << q;
      for (std::size_t i = lo; i < hi; ++i) acc += std::conj(lhs[i]) * rhs[i ^ bit];
    }
    return acc;
  });
}

Amplitude diagonal_element_and_unphase(std::span<Amplitude> lhs, std::span<Amplitude> rhs,
                                       std::span<const double> diag, double gamma) {
  check_dim(lhs.size(), rhs.size());
  check_dim(lhs.size(), diag.size());
  return chunked_sum<Amplitude>(lhs.size(), [&](std::size_t lo, std::size_t hi) {
    Amplitude acc{};
    for (std::size_t i = lo; i < hi; ++i) {
      acc += std::conj(lhs[i]) * diag[i] * rhs[i];
      const double angle = gamma * diag[i];
      const Amplitude ph(std::cos(angle), std::sin(angle));
      lhs[i] *= ph;
      rhs[i] *= ph;
    }
    return acc;
  });
}

void cost_phases(std::span<const double> diag, double gamma, std::span<Amplitude> out) {
  check_dim(diag.size(), out.size());
  const std::size_t chunks = (diag.size() + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < chunks; ++k) {
    const std::size_t lo = k * kChunk;
    fill_phases(diag.data() + lo, -gamma, std::min(kChunk, diag.size() - lo), out.data() + lo);
  }
}

void apply_layer(std::span<Amplitude> psi, std::size_t n, std::span<const double> diag,
                 double gamma, double beta) {
  check_dim(psi.size(), diag.size());
  check_layer_dims(psi.size(), n);
  layer_impl(psi, TileLayout(n), diag, nullptr, gamma, beta);
}

void apply_layer(std::span<Amplitude> psi, std::size_t n, std::span<const Amplitude> phases,
                 double beta) {
  check_dim(psi.size(), phases.size());
  check_layer_dims(psi.size(), n);
  layer_impl(psi, TileLayout(n), {}, phases.data(), 0.0, beta);
}

AdjointLayerTerms adjoint_layer(std::span<Amplitude> lambda, std::span<Amplitude> psi,
                                std::size_t n, std::span<const double> diag, double gamma,
                                double beta) {
  check_dim(lambda.size(), psi.size());
  check_dim(psi.size(), diag.size());
  check_layer_dims(psi.size(), n);
  return adjoint_impl(lambda, psi, TileLayout(n), diag, nullptr, gamma, beta);
}

AdjointLayerTerms adjoint_layer(std::span<Amplitude> lambda, std::span<Amplitude> psi,
                                std::size_t n, std::span<const double> diag,
                                std::span<const Amplitude> phases, double beta) {
  check_dim(lambda.size(), psi.size());
  check_dim(psi.size(), diag.size());
  check_dim(psi.size(), phases.size());
  check_layer_dims(psi.size(), n);
  return adjoint_impl(lambda, psi, TileLayout(n), diag, phases.data(), 0.0, beta);
}

}  // namespace kernels
}  // namespace risq
