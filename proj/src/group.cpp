#include "grouppack/group.hpp"

#include <algorithm>
#include <sstream>

namespace gp {

// ---------------------------------------------------------------- GroupDesc

GroupDesc GroupDesc::ut(int d) {
  require(d >= 1, Errc::invalid_argument, "ut dimension must be >= 1");
  GroupDesc g;
  g.kind = Kind::ut;
  g.param = d;
  return g;
}

GroupDesc GroupDesc::heis_ze(int e) {
  require(e >= 0, Errc::invalid_argument, "heis_ze rank must be >= 0");
  GroupDesc g;
  g.kind = Kind::heis_ze;
  g.param = e;
  return g;
}

GroupDesc GroupDesc::galpha() {
  GroupDesc g;
  g.kind = Kind::galpha;
  return g;
}

GroupDesc GroupDesc::dinf() {
  GroupDesc g;
  g.kind = Kind::dinf;
  return g;
}

GroupDesc GroupDesc::z(int n) {
  require(n >= 0, Errc::invalid_argument, "z rank must be >= 0");
  GroupDesc g;
  g.kind = Kind::z;
  g.param = n;
  return g;
}

GroupDesc GroupDesc::product(std::vector<GroupDesc> fs) {
  require(!fs.empty(), Errc::invalid_argument, "product needs at least one factor");
  for (const GroupDesc& f : fs)
    require(f.kind != Kind::product, Errc::invalid_argument,
            "product factors must not be products (flatten first)");
  GroupDesc g;
  g.kind = Kind::product;
  g.factors = std::move(fs);
  return g;
}

int GroupDesc::generator_count() const {
  switch (kind) {
    case Kind::ut:
      return param * (param - 1) / 2;
    case Kind::heis_ze:
      return 3 + param;
    case Kind::galpha:
      return 2;
    case Kind::dinf:
      return 2;
    case Kind::z:
      return param;
    case Kind::product: {
      int n = 0;
      for (const GroupDesc& f : factors) n += f.generator_count();
      return n;
    }
  }
  fail(Errc::invalid_argument, "bad descriptor kind");
}

bool GroupDesc::operator==(const GroupDesc& o) const {
  return kind == o.kind && param == o.param && factors == o.factors;
}

std::string GroupDesc::str() const {
  switch (kind) {
    case Kind::ut:
      return "ut(" + std::to_string(param) + ")";
    case Kind::heis_ze:
      return "heis_ze(" + std::to_string(param) + ")";
    case Kind::galpha:
      return "galpha";
    case Kind::dinf:
      return "dinf";
    case Kind::z:
      return "z(" + std::to_string(param) + ")";
    case Kind::product: {
      std::string s = "product(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------- IntMatrix

static bool compute_unitriangular(int dim, const std::vector<BigInt>& a) {
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c <= r; ++c) {
      const BigInt& v = a[static_cast<size_t>(r) * dim + c];
      if (r == c ? v != 1 : v != 0) return false;
    }
  return true;
}

IntMatrix::IntMatrix(int d, std::vector<BigInt> entries) : dim(d), a(std::move(entries)) {
  require(d >= 1, Errc::invalid_argument, "matrix dimension must be >= 1");
  require(a.size() == static_cast<size_t>(d) * d, Errc::invalid_argument,
          "matrix entry count does not match dimension");
  unitriangular = compute_unitriangular(dim, a);
}

IntMatrix IntMatrix::identity(int d) {
  std::vector<BigInt> e(static_cast<size_t>(d) * d, BigInt(0));
  for (int i = 0; i < d; ++i) e[static_cast<size_t>(i) * d + i] = 1;
  return IntMatrix(d, std::move(e));
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  require(x.dim == y.dim, Errc::descriptor_mismatch, "matrix dimensions differ");
  const int d = x.dim;
  std::vector<BigInt> r(static_cast<size_t>(d) * d, BigInt(0));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const BigInt& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < d; ++j) {
        const BigInt& ykj = y.at(k, j);
        if (ykj != 0) r[static_cast<size_t>(i) * d + j] += xik * ykj;
      }
    }
  return IntMatrix(d, std::move(r));
}

IntMatrix mat_inv_unitriangular(const IntMatrix& m) {
  require(m.unitriangular, Errc::precondition, "matrix is not unitriangular");
  const int d = m.dim;
  // M = I + N with N strictly upper triangular; inverse is the alternating
  // geometric series, which terminates because N^d = 0.
  IntMatrix n = m;
  for (int i = 0; i < d; ++i) n.at(i, i) = 0;
  IntMatrix acc = IntMatrix::identity(d);
  IntMatrix pw = IntMatrix::identity(d);
  int sign = 1;
  for (int k = 1; k < d; ++k) {
    pw = mat_mul(pw, n);
    sign = -sign;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        acc.at(i, j) += sign > 0 ? pw.at(i, j) : BigInt(-pw.at(i, j));
  }
  return IntMatrix(d, std::move(acc.a));
}

BigInt ut_norm(const IntMatrix& m) {
  BigInt s = 0;
  for (const BigInt& v : m.a) s += big_abs(v);
  return s;
}

// ----------------------------------------------------------------- HeisElem

static void check_same_rank(const HeisElem& x, const HeisElem& y) {
  require(x.z.size() == y.z.size(), Errc::descriptor_mismatch, "Z^e ranks differ");
}

HeisElem heis_mul(const HeisElem& x, const HeisElem& y) {
  check_same_rank(x, y);
  HeisElem r;
  r.a = x.a + y.a;
  r.b = x.b + y.b;
  r.c = x.c + y.c + x.a * y.b;
  r.z.resize(x.z.size());
  for (size_t i = 0; i < x.z.size(); ++i) r.z[i] = x.z[i] + y.z[i];
  return r;
}

HeisElem heis_inv(const HeisElem& x) {
  HeisElem r;
  r.a = -x.a;
  r.b = -x.b;
  r.c = x.a * x.b - x.c;
  r.z.resize(x.z.size());
  for (size_t i = 0; i < x.z.size(); ++i) r.z[i] = -x.z[i];
  return r;
}

HeisElem heisenberg_power(const HeisElem& x, const BigInt& n) {
  HeisElem r;
  r.a = x.a * n;
  r.b = x.b * n;
  r.c = x.c * n + x.a * x.b * ((n - 1) * n / 2);
  r.z.resize(x.z.size());
  for (size_t i = 0; i < x.z.size(); ++i) r.z[i] = x.z[i] * n;
  return r;
}

IntMatrix heis_to_matrix(const HeisElem& x) {
  IntMatrix m = IntMatrix::identity(3);
  m.at(0, 1) = x.a;
  m.at(0, 2) = x.c;
  m.at(1, 2) = x.b;
  return IntMatrix(3, std::move(m.a));
}

// ------------------------------------------------------------------ QuadInt

QuadInt quad_add(const QuadInt& x, const QuadInt& y) { return {x.p + y.p, x.q + y.q}; }
QuadInt quad_sub(const QuadInt& x, const QuadInt& y) { return {x.p - y.p, x.q - y.q}; }

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
  return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p};
}

QuadInt quad_neg(const QuadInt& x) { return {-x.p, -x.q}; }

int quad_sign(const QuadInt& x) {
  const int sp = big_sign(x.p), sq = big_sign(x.q);
  if (sp == 0 && sq == 0) return 0;
  if (sp >= 0 && sq >= 0) return 1;
  if (sp <= 0 && sq <= 0) return -1;
  // Mixed signs: compare p^2 against 2 q^2 on the dominant side.
  const BigInt d = x.p * x.p - 2 * x.q * x.q;
  return sp > 0 ? big_sign(d) : -big_sign(d);
}

int quad_compare(const QuadInt& x, const QuadInt& y) { return quad_sign(quad_sub(x, y)); }

BigInt quad_norm(const QuadInt& x) { return x.p * x.p - 2 * x.q * x.q; }

QuadInt quad_unit_inv(const QuadInt& x) {
  const BigInt n = quad_norm(x);
  require(n == 1 || n == -1, Errc::precondition, "not a unit of Z[sqrt 2]");
  QuadInt conj{x.p, -x.q};
  if (n == 1) return conj;
  return quad_neg(conj);
}

// --------------------------------------------------------------- QuadMatrix

QuadMatrix QuadMatrix::identity() {
  QuadMatrix m;
  m.e[0] = {1, 0};
  m.e[1] = {0, 0};
  m.e[2] = {0, 0};
  m.e[3] = {1, 0};
  return m;
}

QuadMatrix qmat_mul(const QuadMatrix& x, const QuadMatrix& y) {
  QuadMatrix r;
  r.e[0] = quad_add(quad_mul(x.e[0], y.e[0]), quad_mul(x.e[1], y.e[2]));
  r.e[1] = quad_add(quad_mul(x.e[0], y.e[1]), quad_mul(x.e[1], y.e[3]));
  r.e[2] = quad_add(quad_mul(x.e[2], y.e[0]), quad_mul(x.e[3], y.e[2]));
  r.e[3] = quad_add(quad_mul(x.e[2], y.e[1]), quad_mul(x.e[3], y.e[3]));
  return r;
}

QuadMatrix qmat_inv(const QuadMatrix& x) {
  QuadInt det = quad_sub(quad_mul(x.e[0], x.e[3]), quad_mul(x.e[1], x.e[2]));
  QuadInt dinv = quad_unit_inv(det);
  QuadMatrix r;
  r.e[0] = quad_mul(x.e[3], dinv);
  r.e[1] = quad_mul(quad_neg(x.e[1]), dinv);
  r.e[2] = quad_mul(quad_neg(x.e[2]), dinv);
  r.e[3] = quad_mul(x.e[0], dinv);
  return r;
}

// ------------------------------------------------------------- DihedralElem

DihedralElem dih_mul(const DihedralElem& x, const DihedralElem& y) {
  DihedralElem r;
  if (x.flip)
    r.shift = x.shift - y.shift;
  else
    r.shift = x.shift + y.shift;
  r.flip = x.flip ^ y.flip;
  return r;
}

DihedralElem dih_inv(const DihedralElem& x) {
  if (x.flip) return x;  // reflections are involutions
  return {-x.shift, 0};
}

// ------------------------------------------------------------ GroupElement

GroupElement identity(const GroupDesc& g) {
  switch (g.kind) {
    case GroupDesc::Kind::ut:
      return {g, IntMatrix::identity(g.param)};
    case GroupDesc::Kind::heis_ze: {
      HeisElem h;
      h.a = h.b = h.c = 0;
      h.z.assign(static_cast<size_t>(g.param), BigInt(0));
      return {g, std::move(h)};
    }
    case GroupDesc::Kind::galpha:
      return {g, QuadMatrix::identity()};
    case GroupDesc::Kind::dinf:
      return {g, DihedralElem{0, 0}};
    case GroupDesc::Kind::z: {
      ZVec v;
      v.v.assign(static_cast<size_t>(g.param), BigInt(0));
      return {g, std::move(v)};
    }
    case GroupDesc::Kind::product: {
      std::vector<GroupElement> parts;
      parts.reserve(g.factors.size());
      for (const GroupDesc& f : g.factors) parts.push_back(identity(f));
      return {g, std::move(parts)};
    }
  }
  fail(Errc::invalid_argument, "bad descriptor kind");
}

GroupElement generator(const GroupDesc& g, int index) {
  require(index >= 1 && index <= g.generator_count(), Errc::invalid_argument,
          "generator index " + std::to_string(index) + " out of range for " + g.str());
  switch (g.kind) {
    case GroupDesc::Kind::ut: {
      const int d = g.param;
      int k = index;
      for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c)
          if (--k == 0) {
            IntMatrix m = IntMatrix::identity(d);
            m.at(r, c) = 1;
            return {g, IntMatrix(d, std::move(m.a))};
          }
      break;
    }
    case GroupDesc::Kind::heis_ze: {
      GroupElement e = identity(g);
      HeisElem& h = std::get<HeisElem>(e.payload);
      if (index == 1)
        h.a = 1;
      else if (index == 2)
        h.b = 1;
      else if (index == 3)
        h.c = 1;
      else
        h.z[static_cast<size_t>(index) - 4] = 1;
      return e;
    }
    case GroupDesc::Kind::galpha: {
      QuadMatrix m = QuadMatrix::identity();
      if (index == 1)
        m.e[0] = {1, 1};  // alpha = 1 + sqrt 2
      else
        m.e[1] = {1, 0};
      return {g, m};
    }
    case GroupDesc::Kind::dinf:
      return {g, index == 1 ? DihedralElem{1, 0} : DihedralElem{0, 1}};
    case GroupDesc::Kind::z: {
      GroupElement e = identity(g);
      std::get<ZVec>(e.payload).v[static_cast<size_t>(index) - 1] = 1;
      return e;
    }
    case GroupDesc::Kind::product: {
      GroupElement e = identity(g);
      auto& parts = std::get<std::vector<GroupElement>>(e.payload);
      int k = index;
      for (size_t i = 0; i < g.factors.size(); ++i) {
        const int c = g.factors[i].generator_count();
        if (k <= c) {
          parts[i] = generator(g.factors[i], k);
          return e;
        }
        k -= c;
      }
      break;
    }
  }
  fail(Errc::invalid_argument, "generator lookup failed");
}

GroupElement mul(const GroupElement& x, const GroupElement& y) {
  require(x.desc == y.desc, Errc::descriptor_mismatch,
          "cannot multiply elements of " + x.desc.str() + " and " + y.desc.str());
  switch (x.desc.kind) {
    case GroupDesc::Kind::ut: {
      IntMatrix r = mat_mul(std::get<IntMatrix>(x.payload), std::get<IntMatrix>(y.payload));
      return {x.desc, std::move(r)};
    }
    case GroupDesc::Kind::heis_ze:
      return {x.desc, heis_mul(std::get<HeisElem>(x.payload), std::get<HeisElem>(y.payload))};
    case GroupDesc::Kind::galpha:
      return {x.desc, qmat_mul(std::get<QuadMatrix>(x.payload), std::get<QuadMatrix>(y.payload))};
    case GroupDesc::Kind::dinf:
      return {x.desc, dih_mul(std::get<DihedralElem>(x.payload), std::get<DihedralElem>(y.payload))};
    case GroupDesc::Kind::z: {
      const ZVec& a = std::get<ZVec>(x.payload);
      const ZVec& b = std::get<ZVec>(y.payload);
      ZVec r;
      r.v.resize(a.v.size());
      for (size_t i = 0; i < a.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
      return {x.desc, std::move(r)};
    }
    case GroupDesc::Kind::product: {
      const auto& a = std::get<std::vector<GroupElement>>(x.payload);
      const auto& b = std::get<std::vector<GroupElement>>(y.payload);
      std::vector<GroupElement> r;
      r.reserve(a.size());
      for (size_t i = 0; i < a.size(); ++i) r.push_back(mul(a[i], b[i]));
      return {x.desc, std::move(r)};
    }
  }
  fail(Errc::invalid_argument, "bad descriptor kind");
}

GroupElement inv(const GroupElement& x) {
  switch (x.desc.kind) {
    case GroupDesc::Kind::ut:
      return {x.desc, mat_inv_unitriangular(std::get<IntMatrix>(x.payload))};
    case GroupDesc::Kind::heis_ze:
      return {x.desc, heis_inv(std::get<HeisElem>(x.payload))};
    case GroupDesc::Kind::galpha:
      return {x.desc, qmat_inv(std::get<QuadMatrix>(x.payload))};
    case GroupDesc::Kind::dinf:
      return {x.desc, dih_inv(std::get<DihedralElem>(x.payload))};
    case GroupDesc::Kind::z: {
      ZVec r = std::get<ZVec>(x.payload);
      for (BigInt& v : r.v) v = -v;
      return {x.desc, std::move(r)};
    }
    case GroupDesc::Kind::product: {
      std::vector<GroupElement> r = std::get<std::vector<GroupElement>>(x.payload);
      for (GroupElement& p : r) p = inv(p);
      return {x.desc, std::move(r)};
    }
  }
  fail(Errc::invalid_argument, "bad descriptor kind");
}

bool eq(const GroupElement& x, const GroupElement& y) {
  require(x.desc == y.desc, Errc::descriptor_mismatch, "comparing elements of different groups");
  if (x.payload.index() != y.payload.index()) return false;
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(y.payload);
        if constexpr (std::is_same_v<T, std::vector<GroupElement>>) {
          if (a.size() != b.size()) return false;
          for (size_t i = 0; i < a.size(); ++i)
            if (!eq(a[i], b[i])) return false;
          return true;
        } else {
          return a == b;
        }
      },
      x.payload);
}

bool is_identity(const GroupElement& x) { return eq(x, identity(x.desc)); }

GroupElement evaluate_word(const GroupDesc& g, const GeneratorWord& w) {
  GroupElement acc = identity(g);
  const int n = g.generator_count();
  for (int letter : w) {
    require(letter != 0, Errc::invalid_argument, "word letters must be nonzero");
    const int idx = letter > 0 ? letter : -letter;
    require(idx <= n, Errc::invalid_argument,
            "word letter " + std::to_string(letter) + " out of range for " + g.str());
    GroupElement ge = generator(g, idx);
    acc = mul(acc, letter > 0 ? ge : inv(ge));
  }
  return acc;
}

GroupElement elem_pow(const GroupElement& x, const BigInt& n) {
  if (n < 0) return elem_pow(inv(x), -n);
  if (x.desc.kind == GroupDesc::Kind::heis_ze)
    return {x.desc, heisenberg_power(std::get<HeisElem>(x.payload), n)};
  GroupElement acc = identity(x.desc);
  GroupElement base = x;
  BigInt k = n;
  while (k > 0) {
    if ((k & 1) != 0) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

GeneratorWord word_inverse(const GeneratorWord& w) {
  GeneratorWord r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

static void key_append(std::ostream& os, const GroupElement& x) {
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, IntMatrix>) {
          os << "m";
          for (const BigInt& v : a.a) os << v << ",";
        } else if constexpr (std::is_same_v<T, HeisElem>) {
          os << "h" << a.a << "," << a.b << "," << a.c << ";";
          for (const BigInt& v : a.z) os << v << ",";
        } else if constexpr (std::is_same_v<T, QuadMatrix>) {
          os << "q";
          for (const QuadInt& v : a.e) os << v.p << "+" << v.q << "r,";
        } else if constexpr (std::is_same_v<T, DihedralElem>) {
          os << "d" << a.shift << "," << a.flip;
        } else if constexpr (std::is_same_v<T, ZVec>) {
          os << "z";
          for (const BigInt& v : a.v) os << v << ",";
        } else {
          os << "p(";
          for (const GroupElement& p : a) {
            key_append(os, p);
            os << "|";
          }
          os << ")";
        }
      },
      x.payload);
}

std::string canonical_key(const GroupElement& x) {
  std::ostringstream os;
  key_append(os, x);
  return os.str();
}

// --------------------------------------------------------------------- JSON

Json desc_to_json(const GroupDesc& g) {
  Json j;
  switch (g.kind) {
    case GroupDesc::Kind::ut:
      j = {{"type", "ut"}, {"d", g.param}};
      break;
    case GroupDesc::Kind::heis_ze:
      j = {{"type", "heis_ze"}, {"e", g.param}};
      break;
    case GroupDesc::Kind::galpha:
      j = {{"type", "galpha"}};
      break;
    case GroupDesc::Kind::dinf:
      j = {{"type", "dinf"}};
      break;
    case GroupDesc::Kind::z:
      j = {{"type", "z"}, {"n", g.param}};
      break;
    case GroupDesc::Kind::product: {
      Json fs = Json::array();
      for (const GroupDesc& f : g.factors) fs.push_back(desc_to_json(f));
      j = {{"type", "product"}, {"factors", std::move(fs)}};
      break;
    }
  }
  return j;
}

GroupDesc desc_from_json(const Json& j) {
  require(j.is_object() && j.contains("type") && j["type"].is_string(), Errc::parse,
          "group descriptor must be an object with a \"type\" string");
  const std::string t = j["type"].get<std::string>();
  auto int_field = [&](const char* name) {
    require(j.contains(name) && j[name].is_number_integer(), Errc::parse,
            std::string("descriptor field \"") + name + "\" must be an integer");
    return j[name].get<int>();
  };
  if (t == "ut") return GroupDesc::ut(int_field("d"));
  if (t == "heis_ze") return GroupDesc::heis_ze(int_field("e"));
  if (t == "galpha") return GroupDesc::galpha();
  if (t == "dinf") return GroupDesc::dinf();
  if (t == "z") return GroupDesc::z(int_field("n"));
  if (t == "product") {
    require(j.contains("factors") && j["factors"].is_array(), Errc::parse,
            "product descriptor needs a \"factors\" array");
    std::vector<GroupDesc> fs;
    for (const Json& f : j["factors"]) fs.push_back(desc_from_json(f));
    return GroupDesc::product(std::move(fs));
  }
  fail(Errc::parse, "unknown group type \"" + t + "\"");
}

Json word_to_json(const GeneratorWord& w) {
  Json j = Json::array();
  for (int x : w) j.push_back(x);
  return j;
}

GeneratorWord word_from_json(const Json& j) {
  require(j.is_array(), Errc::parse, "generator word must be a JSON array");
  GeneratorWord w;
  for (const Json& x : j) {
    require(x.is_number_integer(), Errc::parse, "word letters must be integers");
    const int v = x.get<int>();
    require(v != 0, Errc::parse, "word letters must be nonzero");
    w.push_back(v);
  }
  return w;
}

Json elem_to_json(const GroupElement& x) {
  return std::visit(
      [&](const auto& a) -> Json {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, IntMatrix>) {
          Json rows = Json::array();
          for (int r = 0; r < a.dim; ++r) {
            Json row = Json::array();
            for (int c = 0; c < a.dim; ++c) row.push_back(big_to_json(a.at(r, c)));
            rows.push_back(std::move(row));
          }
          return rows;
        } else if constexpr (std::is_same_v<T, HeisElem>) {
          Json h = Json::array({big_to_json(a.a), big_to_json(a.b), big_to_json(a.c)});
          Json j = {{"h", std::move(h)}};
          if (!a.z.empty()) {
            Json z = Json::array();
            for (const BigInt& v : a.z) z.push_back(big_to_json(v));
            j["z"] = std::move(z);
          }
          return j;
        } else if constexpr (std::is_same_v<T, QuadMatrix>) {
          Json rows = Json::array();
          for (int r = 0; r < 2; ++r) {
            Json row = Json::array();
            for (int c = 0; c < 2; ++c) {
              const QuadInt& v = a.e[static_cast<size_t>(r) * 2 + c];
              row.push_back(Json::array({big_to_json(v.p), big_to_json(v.q)}));
            }
            rows.push_back(std::move(row));
          }
          return rows;
        } else if constexpr (std::is_same_v<T, DihedralElem>) {
          return Json::array({big_to_json(a.shift), a.flip});
        } else if constexpr (std::is_same_v<T, ZVec>) {
          Json j = Json::array();
          for (const BigInt& v : a.v) j.push_back(big_to_json(v));
          return j;
        } else {
          Json j = Json::array();
          for (const GroupElement& p : a) j.push_back(elem_to_json(p));
          return j;
        }
      },
      x.payload);
}

GroupElement elem_from_json(const GroupDesc& g, const Json& j) {
  switch (g.kind) {
    case GroupDesc::Kind::ut: {
      const int d = g.param;
      require(j.is_array() && j.size() == static_cast<size_t>(d), Errc::parse,
              "ut element must be an array of " + std::to_string(d) + " rows");
      std::vector<BigInt> e;
      e.reserve(static_cast<size_t>(d) * d);
      for (const Json& row : j) {
        require(row.is_array() && row.size() == static_cast<size_t>(d), Errc::parse,
                "ut row length mismatch");
        for (const Json& v : row) e.push_back(big_from_json(v));
      }
      IntMatrix m(d, std::move(e));
      require(m.unitriangular, Errc::invalid_argument, "ut element must be unitriangular");
      return {g, std::move(m)};
    }
    case GroupDesc::Kind::heis_ze: {
      require(j.is_object() && j.contains("h") && j["h"].is_array() && j["h"].size() == 3,
              Errc::parse, "heis_ze element must be {\"h\":[a,b,c],\"z\":[..]}");
      HeisElem h;
      h.a = big_from_json(j["h"][0]);
      h.b = big_from_json(j["h"][1]);
      h.c = big_from_json(j["h"][2]);
      if (g.param == 0) {
        require(!j.contains("z") || (j["z"].is_array() && j["z"].empty()), Errc::parse,
                "unexpected z part for heis_ze(0)");
      } else {
        require(j.contains("z") && j["z"].is_array() &&
                    j["z"].size() == static_cast<size_t>(g.param),
                Errc::parse, "z part must have " + std::to_string(g.param) + " entries");
        for (const Json& v : j["z"]) h.z.push_back(big_from_json(v));
      }
      return {g, std::move(h)};
    }
    case GroupDesc::Kind::galpha: {
      require(j.is_array() && j.size() == 2, Errc::parse, "galpha element must be a 2x2 array");
      QuadMatrix m;
      for (int r = 0; r < 2; ++r) {
        const Json& row = j[static_cast<size_t>(r)];
        require(row.is_array() && row.size() == 2, Errc::parse, "galpha row length mismatch");
        for (int c = 0; c < 2; ++c) {
          const Json& v = row[static_cast<size_t>(c)];
          require(v.is_array() && v.size() == 2, Errc::parse,
                  "galpha entries are [p,q] pairs meaning p+q*sqrt(2)");
          m.e[static_cast<size_t>(r) * 2 + c] = {big_from_json(v[0]), big_from_json(v[1])};
        }
      }
      return {g, std::move(m)};
    }
    case GroupDesc::Kind::dinf: {
      require(j.is_array() && j.size() == 2, Errc::parse, "dinf element must be [shift, flip]");
      DihedralElem d;
      d.shift = big_from_json(j[0]);
      require(j[1].is_number_integer() && (j[1] == 0 || j[1] == 1), Errc::parse,
              "dinf flip must be 0 or 1");
      d.flip = j[1].get<int>();
      return {g, std::move(d)};
    }
    case GroupDesc::Kind::z: {
      require(j.is_array() && j.size() == static_cast<size_t>(g.param), Errc::parse,
              "z element must have " + std::to_string(g.param) + " entries");
      ZVec v;
      for (const Json& x : j) v.v.push_back(big_from_json(x));
      return {g, std::move(v)};
    }
    case GroupDesc::Kind::product: {
      require(j.is_array() && j.size() == g.factors.size(), Errc::parse,
              "product element must have one entry per factor");
      std::vector<GroupElement> parts;
      for (size_t i = 0; i < g.factors.size(); ++i)
        parts.push_back(elem_from_json(g.factors[i], j[i]));
      return {g, std::move(parts)};
    }
  }
  fail(Errc::invalid_argument, "bad descriptor kind");
}

}  // namespace gp
