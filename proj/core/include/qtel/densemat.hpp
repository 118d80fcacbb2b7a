#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qtel {

using cplx = std::complex<double>;

// Max-entry tolerance for treating a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-10;
// Default max-entry tolerance for matrix equality checks.
inline constexpr double kEqualityTol = 1e-12;

// Dense square complex matrix, row-major storage.
//
// Dimensions in this project never exceed 8 (three qubits), so everything
// below is the naive O(n^3) algorithm. Constructors reject non-finite
// entries; mutation through operator() is the builder path and is not
// re-validated.
class ComplexMatrix {
 public:
  // Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);

  // Takes ownership of row-major entries; entries.size() must equal dim*dim
  // and every component must be finite.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::span<const cplx> entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

ComplexMatrix identity(std::size_t dim);

// Standard matrix product; throws std::invalid_argument on dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix-vector product (used for applying projectors to state vectors).
std::vector<cplx> multiply(const ComplexMatrix& a, std::span<const cplx> v);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

// Kronecker product. Subsystem ordering: the left factor is the most
// significant index digit, i.e. out(ra*b.dim()+rb, ca*b.dim()+cb) =
// a(ra,ca)*b(rb,cb). This matches the product basis {uu, ud, du, dd}
// used throughout.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced matrix over the kept subsystems (original order preserved).
// `dims` lists the subsystem dimensions, subsystem 0 being the most
// significant digit; their product must equal a.dim(). `keep` must be a
// nonempty set of distinct subsystem indices.
ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<std::size_t>& keep,
                            const std::vector<std::size_t>& dims);

// Sum of diagonal entries.
cplx trace(const ComplexMatrix& a);

// All eigenvalues of a Hermitian matrix, ascending. Computed by cyclic
// Jacobi rotations on the real-symmetric embedding [[Re, -Im], [Im, Re]];
// accuracy is near machine precision at these dimensions. Throws if the
// input is not Hermitian within kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Smallest eigenvalue of a Hermitian matrix (see hermitian_eigenvalues).
double min_eigenvalue_hermitian(const ComplexMatrix& a);

// Largest entrywise deviation |a - b|; matrices must share dimensions.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qtel
