#include "qtel/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qtel {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, cplx{0.0, 0.0}) {
  require(dim >= 1, "ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  require(dim >= 1, "ComplexMatrix: dim must be >= 1");
  require(entries_.size() == dim * dim, "ComplexMatrix: entries size must equal dim*dim");
  for (const cplx& z : entries_) {
    require(finite(z), "ComplexMatrix: entries must be finite (no NaN/Inf)");
  }
}

ComplexMatrix identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.dim() == b.dim(), "multiply: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += ark * b(k, c);
      }
    }
  }
  return out;
}

std::vector<cplx> multiply(const ComplexMatrix& a, std::span<const cplx> v) {
  require(v.size() == a.dim(), "multiply: vector length must equal matrix dim");
  std::vector<cplx> out(a.dim(), cplx{0.0, 0.0});
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      out[r] += a(r, c) * v[c];
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = std::conj(a(c, r));
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t ca = 0; ca < na; ++ca) {
      const cplx f = a(ra, ca);
      for (std::size_t rb = 0; rb < nb; ++rb) {
        for (std::size_t cb = 0; cb < nb; ++cb) {
          out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<std::size_t>& keep,
                            const std::vector<std::size_t>& dims) {
  const std::size_t k = dims.size();
  std::size_t prod = 1;
  for (std::size_t d : dims) prod *= d;
  require(prod == a.dim(), "partial_trace: product of dims must equal matrix dim");
  require(!keep.empty(), "partial_trace: keep set must be nonempty");

  std::set<std::size_t> keep_set(keep.begin(), keep.end());
  require(keep_set.size() == keep.size(), "partial_trace: keep indices must be distinct");
  for (std::size_t i : keep_set) {
    require(i < k, "partial_trace: keep index out of range");
  }

  std::vector<std::size_t> kept, traced;
  for (std::size_t i = 0; i < k; ++i) {
    (keep_set.count(i) ? kept : traced).push_back(i);
  }

  // Subsystem 0 is the most significant digit: stride_i = prod of dims after i.
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) {
    stride[i - 1] = stride[i] * dims[i];
  }

  std::size_t dim_kept = 1, dim_traced = 1;
  for (std::size_t i : kept) dim_kept *= dims[i];
  for (std::size_t i : traced) dim_traced *= dims[i];

  // Decompose a flat index over a subsystem subset into its full-index offset.
  auto offset_of = [&](std::size_t flat, const std::vector<std::size_t>& subsystems) {
    std::size_t off = 0;
    for (std::size_t j = subsystems.size(); j-- > 0;) {
      const std::size_t sub = subsystems[j];
      off += (flat % dims[sub]) * stride[sub];
      flat /= dims[sub];
    }
    return off;
  };

  ComplexMatrix out(dim_kept);
  for (std::size_t rk = 0; rk < dim_kept; ++rk) {
    const std::size_t row_base = offset_of(rk, kept);
    for (std::size_t ck = 0; ck < dim_kept; ++ck) {
      const std::size_t col_base = offset_of(ck, kept);
      cplx sum{0.0, 0.0};
      for (std::size_t t = 0; t < dim_traced; ++t) {
        const std::size_t toff = offset_of(t, traced);
        sum += a(row_base + toff, col_base + toff);
      }
      out(rk, ck) = sum;
    }
  }
  return out;
}

cplx trace(const ComplexMatrix& a) {
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.dim() == b.dim(), "max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = r; c < a.dim(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

namespace {

// Cyclic Jacobi eigenvalue iteration for a real symmetric matrix held
// row-major in `m`. Only eigenvalues are needed, so no eigenvector
// accumulation. Converges quadratically; 30 sweeps is far beyond what a
// 16x16 needs.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> m, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * n + c]; };

  double scale = 0.0;
  for (double x : m) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const double stop = 1e-15 * scale;
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= stop * 1e-2) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < n; ++i) {
          const double mip = at(i, p);
          const double miq = at(i, q);
          at(i, p) = c * mip - s * miq;
          at(i, q) = s * mip + c * miq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double mpi = at(p, i);
          const double mqi = at(q, i);
          at(p, i) = c * mpi - s * mqi;
          at(q, i) = s * mpi + c * mqi;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  require(is_hermitian(a), "hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  const std::size_t n = a.dim();

  // Real-symmetric embedding [[Re, -Im], [Im, Re]]: its spectrum is the
  // spectrum of the Hermitian input with every eigenvalue doubled, so
  // taking every other entry of the sorted list recovers each once.
  std::vector<double> e(4 * n * n, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return e[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const cplx z = a(r, c);
      at(r, c) = z.real();
      at(r + n, c + n) = z.real();
      at(r, c + n) = -z.imag();
      at(r + n, c) = z.imag();
    }
  }

  std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(e), 2 * n);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
  return eig;
}

double min_eigenvalue_hermitian(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a).front();
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = s * a(r, c);
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx{s, 0.0} * a; }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.dim() == b.dim(), "operator+: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.dim() == b.dim(), "operator-: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

}  // namespace qtel
