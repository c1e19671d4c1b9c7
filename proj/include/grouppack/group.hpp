#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "grouppack/bigint.hpp"
#include "grouppack/error.hpp"
#include "grouppack/jsonio.hpp"

namespace gp {

/// Descriptor of a supported group. Direct products are flat: a factor of a
/// product is never itself a product.
struct GroupDesc {
  enum class Kind { ut, heis_ze, galpha, dinf, z, product };

  Kind kind = Kind::z;
  int param = 0;  // ut: matrix dimension d; heis_ze: rank e of the Z^e part; z: rank n
  std::vector<GroupDesc> factors;

  static GroupDesc ut(int d);
  static GroupDesc heis_ze(int e);
  static GroupDesc galpha();
  static GroupDesc dinf();
  static GroupDesc z(int n);
  static GroupDesc product(std::vector<GroupDesc> fs);

  /// Number of word generators, see generator() for the fixed conventions.
  int generator_count() const;

  bool operator==(const GroupDesc& o) const;
  std::string str() const;
};

/// Square integer matrix, row major. The unitriangular flag is computed from
/// the entries and kept truthful by every operation.
struct IntMatrix {
  int dim = 0;
  std::vector<BigInt> a;  // dim*dim entries
  bool unitriangular = false;

  IntMatrix() = default;
  IntMatrix(int d, std::vector<BigInt> entries);
  static IntMatrix identity(int d);

  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
  bool operator==(const IntMatrix& o) const { return dim == o.dim && a == o.a; }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
/// Inverse of a unitriangular matrix (exact over Z).
IntMatrix mat_inv_unitriangular(const IntMatrix& m);
/// Norm |M|: sum of absolute values of all entries.
BigInt ut_norm(const IntMatrix& m);

/// Element of H3(Z) x Z^e in coordinates: (a, b, c) with the group law
/// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2), plus an additive part.
struct HeisElem {
  BigInt a, b, c;
  std::vector<BigInt> z;

  bool central() const { return a == 0 && b == 0; }
  bool operator==(const HeisElem& o) const {
    return a == o.a && b == o.b && c == o.c && z == o.z;
  }
};

HeisElem heis_mul(const HeisElem& x, const HeisElem& y);
HeisElem heis_inv(const HeisElem& x);
/// Closed form power: A^n = (a n, b n, c n + a b (n-1)n/2), z part scales by n.
/// Defined for all integer n.
HeisElem heisenberg_power(const HeisElem& x, const BigInt& n);
/// Embedding of the (a,b,c) part as a 3x3 unitriangular matrix; kept for
/// cross checking against matrix arithmetic.
IntMatrix heis_to_matrix(const HeisElem& x);

/// p + q*sqrt(2) with exact integer arithmetic.
struct QuadInt {
  BigInt p, q;
  bool operator==(const QuadInt& o) const { return p == o.p && q == o.q; }
};

QuadInt quad_add(const QuadInt& x, const QuadInt& y);
QuadInt quad_sub(const QuadInt& x, const QuadInt& y);
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);
QuadInt quad_neg(const QuadInt& x);
/// Sign of p + q*sqrt(2), decided by integer reasoning on p, q, p^2 - 2 q^2.
int quad_sign(const QuadInt& x);
/// -1, 0, 1 as x <, =, > y in the real order.
int quad_compare(const QuadInt& x, const QuadInt& y);
/// Norm p^2 - 2 q^2.
BigInt quad_norm(const QuadInt& x);
/// Inverse of a unit (norm +-1); Errc::precondition otherwise.
QuadInt quad_unit_inv(const QuadInt& x);

/// 2x2 matrix over Z[sqrt 2]; entries row major.
struct QuadMatrix {
  std::array<QuadInt, 4> e{};
  static QuadMatrix identity();
  bool operator==(const QuadMatrix& o) const { return e == o.e; }
};

QuadMatrix qmat_mul(const QuadMatrix& x, const QuadMatrix& y);
/// Inverse via adjugate; requires the determinant to be a unit of Z[sqrt 2].
QuadMatrix qmat_inv(const QuadMatrix& x);

/// Element (n, s) of the infinite dihedral group, s in {0,1}:
/// (n,s)(m,t) = (n + (-1)^s m, s xor t).
struct DihedralElem {
  BigInt shift;
  int flip = 0;
  bool operator==(const DihedralElem& o) const { return shift == o.shift && flip == o.flip; }
};

DihedralElem dih_mul(const DihedralElem& x, const DihedralElem& y);
DihedralElem dih_inv(const DihedralElem& x);

struct ZVec {
  std::vector<BigInt> v;
  bool operator==(const ZVec& o) const { return v == o.v; }
};

struct GroupElement;
using ElementPayload = std::variant<IntMatrix, HeisElem, QuadMatrix, DihedralElem, ZVec,
                                    std::vector<GroupElement>>;

struct GroupElement {
  GroupDesc desc;
  ElementPayload payload;
};

/// Word over the generators of a group: nonzero signed indices, negative for
/// inverses. This is the wire form of group elements in instance files.
using GeneratorWord = std::vector<int>;

GroupElement identity(const GroupDesc& g);

/// Fixed generating sets (1-based index):
///   ut(d):      elementary matrices E(r,c), r<c, in row major order
///   heis_ze(e): x=(1,0,0), y=(0,1,0), z=(0,0,1), then unit vectors of Z^e
///   galpha:     1 -> g_alpha = [[1+sqrt2,0],[0,1]], 2 -> h = [[1,1],[0,1]]
///   dinf:       1 -> t = (1,0), 2 -> s = (0,1)
///   z(n):       unit vectors
///   product:    factor generators concatenated in factor order
GroupElement generator(const GroupDesc& g, int index);

GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement inv(const GroupElement& x);
bool eq(const GroupElement& x, const GroupElement& y);
bool is_identity(const GroupElement& x);

GroupElement evaluate_word(const GroupDesc& g, const GeneratorWord& w);
/// x^n for any integer n, via the closed Heisenberg form where applicable.
GroupElement elem_pow(const GroupElement& x, const BigInt& n);

/// Inverse of a word as a word: reversed with negated letters.
GeneratorWord word_inverse(const GeneratorWord& w);

/// Canonical string key for hashing and deduplication.
std::string canonical_key(const GroupElement& x);

// JSON wire formats.
Json desc_to_json(const GroupDesc& g);
GroupDesc desc_from_json(const Json& j);
Json word_to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);
Json elem_to_json(const GroupElement& x);
GroupElement elem_from_json(const GroupDesc& g, const Json& j);

}  // namespace gp
