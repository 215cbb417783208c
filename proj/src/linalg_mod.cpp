#include "slorbits/linalg_mod.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

namespace slorbits {

namespace {

// Exact determinant arithmetic runs in 128 bits with explicit overflow
// checks, so huge moduli fail loudly instead of wrapping.
using Wide = __int128;

Wide wide_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact matrix arithmetic");
  return out;
}

Wide wide_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact matrix arithmetic");
  return out;
}

Wide wide_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact matrix arithmetic");
  return out;
}

Int reduce(Int x, Int n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

Int reduce_wide(Wide v, Int n) {
  Wide r = v % n;
  if (r < 0) r += n;
  return static_cast<Int>(r);
}

// Laplace expansion along the topmost remaining row; cols marks the columns
// still in play. Exact over the integers.
Wide det_cofactor(std::span<const Int> a, int m, int row, unsigned cols) {
  if (row == m) return 1;
  Wide sum = 0;
  int sign = 1;
  for (int c = 0; c < m; ++c) {
    if (!(cols & (1u << c))) continue;
    const Int entry = a[static_cast<std::size_t>(row) * m + c];
    if (entry != 0) {
      const Wide sub = det_cofactor(a, m, row + 1, cols & ~(1u << c));
      const Wide term = wide_mul(entry, sub);
      sum = sign > 0 ? wide_add(sum, term) : wide_sub(sum, term);
    }
    sign = -sign;
  }
  return sum;
}

// Fraction-free Bareiss elimination with row pivoting; every division is
// exact over the integers, so no element of Z_n is ever inverted.
Wide det_bareiss(std::vector<Wide> a, int m) {
  Wide denom = 1;
  int sign = 1;
  for (int k = 0; k + 1 < m; ++k) {
    int pivot = -1;
    for (int i = k; i < m; ++i) {
      if (a[static_cast<std::size_t>(i) * m + k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      for (int j = 0; j < m; ++j)
        std::swap(a[static_cast<std::size_t>(k) * m + j],
                  a[static_cast<std::size_t>(pivot) * m + j]);
      sign = -sign;
    }
    const Wide pk = a[static_cast<std::size_t>(k) * m + k];
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        Wide& cell = a[static_cast<std::size_t>(i) * m + j];
        const Wide num =
            wide_sub(wide_mul(cell, pk),
                     wide_mul(a[static_cast<std::size_t>(i) * m + k],
                              a[static_cast<std::size_t>(k) * m + j]));
        cell = num / denom;
      }
      a[static_cast<std::size_t>(i) * m + k] = 0;
    }
    denom = pk;
  }
  const Wide last = a[static_cast<std::size_t>(m - 1) * m + (m - 1)];
  return sign > 0 ? last : -last;
}

Wide det_exact(std::span<const Int> a, int m) {
  if (m <= 4) return det_cofactor(a, m, 0, (1u << m) - 1);
  std::vector<Wide> w(a.begin(), a.end());
  return det_bareiss(std::move(w), m);
}

void require_compatible(const VectorModN& a, const MatrixModN& g) {
  if (!(a.modulus() == g.modulus()))
    throw std::invalid_argument("modulus mismatch between vector and matrix");
  if (a.dim() != g.dim())
    throw std::invalid_argument("dimension mismatch between vector and matrix");
}

Int parse_int_token(std::string_view tok) {
  const std::size_t b = tok.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    throw std::invalid_argument("empty entry in literal");
  const std::size_t e = tok.find_last_not_of(" \t");
  tok = tok.substr(b, e - b + 1);
  Int value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad integer '" + std::string(tok) +
                                "' in literal");
  return value;
}

std::vector<Int> parse_row(std::string_view text) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t len =
        comma == std::string_view::npos ? std::string_view::npos : comma - start;
    out.push_back(parse_int_token(text.substr(start, len)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

VectorModN::VectorModN(Modulus modulus, std::vector<Int> components)
    : modulus_(std::move(modulus)), components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("vector needs at least one component");
  for (Int& c : components_) c = reduce(c, modulus_.value());
}

VectorModN VectorModN::zero(const Modulus& modulus, int m) {
  if (m < 1) throw std::invalid_argument("vector needs at least one component");
  return VectorModN(modulus, std::vector<Int>(static_cast<std::size_t>(m), 0));
}

VectorModN VectorModN::unit_last(const Modulus& modulus, int m) {
  if (m < 1) throw std::invalid_argument("vector needs at least one component");
  std::vector<Int> c(static_cast<std::size_t>(m), 0);
  c.back() = 1;
  return VectorModN(modulus, std::move(c));
}

bool VectorModN::is_zero() const {
  for (Int c : components_)
    if (c != 0) return false;
  return true;
}

MatrixModN::MatrixModN(Modulus modulus, const std::vector<std::vector<Int>>& rows)
    : modulus_(std::move(modulus)), m_(static_cast<int>(rows.size())) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  entries_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw std::invalid_argument("matrix must be square");
    for (Int x : row) entries_.push_back(reduce(x, modulus_.value()));
  }
}

MatrixModN::MatrixModN(Modulus modulus, int m, std::vector<Int> row_major)
    : modulus_(std::move(modulus)), m_(m), entries_(std::move(row_major)) {
  if (m < 1) throw std::invalid_argument("matrix needs at least one row");
  if (entries_.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("matrix entry count does not match dimension");
  for (Int& x : entries_) x = reduce(x, modulus_.value());
}

MatrixModN MatrixModN::identity(const Modulus& modulus, int m) {
  if (m < 1) throw std::invalid_argument("matrix needs at least one row");
  std::vector<Int> e(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i) * m + i] = 1;
  return MatrixModN(std::move(modulus), m, std::move(e));
}

MatrixModN mat_mul(const MatrixModN& a, const MatrixModN& b) {
  if (!(a.modulus() == b.modulus()))
    throw std::invalid_argument("modulus mismatch in matrix product");
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch in matrix product");
  const int m = a.dim();
  const Int n = a.modulus().value();
  std::vector<Int> out(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Wide acc = 0;
      for (int k = 0; k < m; ++k)
        acc = wide_add(acc, wide_mul(a.at(i, k), b.at(k, j)));
      out[static_cast<std::size_t>(i) * m + j] = reduce_wide(acc, n);
    }
  }
  return MatrixModN(a.modulus(), m, std::move(out));
}

Int det_mod(std::span<const Int> row_major, int m, Int n) {
  return reduce_wide(det_exact(row_major, m), n);
}

Int det_mod(const MatrixModN& a) {
  return det_mod(a.entries(), a.dim(), a.modulus().value());
}

MatrixModN adjugate(const MatrixModN& a) {
  const int m = a.dim();
  const Int n = a.modulus().value();
  if (m == 1) return MatrixModN(a.modulus(), 1, {1});
  std::vector<Int> out(static_cast<std::size_t>(m) * m);
  std::vector<Int> sub(static_cast<std::size_t>(m - 1) * (m - 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // minor of A with row j and column i removed
      int r = 0;
      for (int ii = 0; ii < m; ++ii) {
        if (ii == j) continue;
        int c = 0;
        for (int jj = 0; jj < m; ++jj) {
          if (jj == i) continue;
          sub[static_cast<std::size_t>(r) * (m - 1) + c] = a.at(ii, jj);
          ++c;
        }
        ++r;
      }
      const Int minor = det_mod(sub, m - 1, n);
      out[static_cast<std::size_t>(i) * m + j] =
          (i + j) % 2 == 0 ? minor : (n - minor) % n;
    }
  }
  return MatrixModN(a.modulus(), m, std::move(out));
}

MatrixModN sl_inverse(const MatrixModN& a) {
  const Int det = det_mod(a);
  if (det != 1)
    throw NotInSlError(det, a.dim(), a.modulus().value());
  return adjugate(a);
}

VectorModN act_unchecked(const VectorModN& a, const MatrixModN& g) {
  require_compatible(a, g);
  const int m = a.dim();
  const Int n = a.modulus().value();
  std::vector<Int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Wide acc = 0;
    for (int j = 0; j < m; ++j) acc = wide_add(acc, wide_mul(a[j], g.at(j, i)));
    out[static_cast<std::size_t>(i)] = reduce_wide(acc, n);
  }
  return VectorModN(a.modulus(), std::move(out));
}

VectorModN act(const VectorModN& a, const MatrixModN& g) {
  require_compatible(a, g);
  const Int det = det_mod(g);
  if (det != 1)
    throw NotInSlError(det, g.dim(), g.modulus().value());
  return act_unchecked(a, g);
}

VectorModN scale_map(int j, const VectorModN& a) {
  const Modulus& nn = a.modulus();
  if (!nn.is_prime_power())
    throw std::domain_error("scale_map needs a prime-power modulus");
  const auto [p, k] = nn.factors()[0];
  if (j < 0 || j > k)
    throw std::domain_error("scale exponent must satisfy 0 <= j <= " +
                            std::to_string(k));
  const Int factor = checked_pow(p, j) % nn.value();
  std::vector<Int> out;
  out.reserve(a.components().size());
  for (Int c : a.components())
    out.push_back(reduce_wide(wide_mul(c, factor), nn.value()));
  return VectorModN(nn, std::move(out));
}

VectorModN parse_vector(const Modulus& modulus, std::string_view text) {
  if (text.find(';') != std::string_view::npos)
    throw std::invalid_argument("vector literal must not contain ';'");
  return VectorModN(modulus, parse_row(text));
}

MatrixModN parse_matrix(const Modulus& modulus, std::string_view text) {
  std::vector<std::vector<Int>> rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::size_t len =
        semi == std::string_view::npos ? std::string_view::npos : semi - start;
    rows.push_back(parse_row(text.substr(start, len)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return MatrixModN(modulus, rows);
}

std::string format_vector(const VectorModN& a) {
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

std::string format_matrix(const MatrixModN& a) {
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < a.dim(); ++j) {
      if (j) out += ',';
      out += std::to_string(a.at(i, j));
    }
  }
  return out;
}

}  // namespace slorbits
