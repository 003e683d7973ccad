#include "cliff/classify.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

namespace cliff {

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }
int mod4(int x) { return ((x % 4) + 4) % 4; }

std::int64_t pow2(int k) {
  if (k < 0) throw std::logic_error("negative power of two in classification arithmetic");
  return std::int64_t{1} << k;
}

void check_symbolic_range(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
  if (p + q > kMaxSymbolicN)
    throw std::invalid_argument("classification supports n <= " + std::to_string(kMaxSymbolicN));
}

/// Ring and doubling from (p - q) mod 8; block size from 2^n afterwards.
MatrixAlgebraType type_from_mod8(int p, int q) {
  const int n = p + q;
  MatrixAlgebraType t;
  switch (mod8(p - q)) {
    case 0: t = {0, DivisionRing::R, false}; break;
    case 1: t = {0, DivisionRing::R, true}; break;
    case 2: t = {0, DivisionRing::R, false}; break;
    case 3: t = {0, DivisionRing::C, false}; break;
    case 4: t = {0, DivisionRing::H, false}; break;
    case 5: t = {0, DivisionRing::H, true}; break;
    case 6: t = {0, DivisionRing::H, false}; break;
    case 7: t = {0, DivisionRing::C, false}; break;
  }
  // 2^n = (doubled ? 2 : 1) * d^2 * dim(ring)
  int log_d2 = n - (t.doubled ? 1 : 0) - (ring_real_dim(t.ring) == 1 ? 0 : ring_real_dim(t.ring) == 2 ? 1 : 2);
  if (log_d2 < 0 || log_d2 % 2 != 0)
    throw std::logic_error("dimension bookkeeping failed for " + std::to_string(p) + "," + std::to_string(q));
  t.d = pow2(log_d2 / 2);
  return t;
}

// --- reduction chain machinery -------------------------------------------

struct Factor {
  bool is_clifford = false;
  int p = 0, q = 0;          // when is_clifford
  MatrixAlgebraType type;    // otherwise

  std::string str() const {
    if (is_clifford) return "C(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return type.str();
  }
};

std::string expression_str(const std::vector<Factor>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " * ";
    s += factors[i].str();
  }
  return s;
}

std::optional<MatrixAlgebraType> base_case(int p, int q) {
  if (p == 0 && q == 0) return MatrixAlgebraType{1, DivisionRing::R, false};
  if (p == 1 && q == 0) return MatrixAlgebraType{1, DivisionRing::R, true};
  if (p == 0 && q == 1) return MatrixAlgebraType{1, DivisionRing::C, false};
  if (p == 2 && q == 0) return MatrixAlgebraType{2, DivisionRing::R, false};
  if (p == 1 && q == 1) return MatrixAlgebraType{2, DivisionRing::R, false};
  if (p == 0 && q == 2) return MatrixAlgebraType{1, DivisionRing::H, false};
  return std::nullopt;
}

}  // namespace

DivisionRing ring_from_letter(char c) {
  switch (c) {
    case 'R': return DivisionRing::R;
    case 'C': return DivisionRing::C;
    case 'H': return DivisionRing::H;
    default: throw std::invalid_argument(std::string("unknown division ring letter: ") + c);
  }
}

std::string MatrixAlgebraType::str() const {
  std::string one;
  if (d == 1)
    one = std::string(1, ring_letter(ring));
  else
    one = "M(" + std::to_string(d) + "," + ring_letter(ring) + ")";
  return doubled ? one + "+" + one : one;
}

int epsilon_square_sign(int p, int q) {
  const int n = p + q;
  if (n == 0) return +1;
  const int m = mod4(p - q);
  if (n % 2 == 0) return m == 0 ? +1 : -1;  // even: +1 at 0, -1 at 2
  return m == 1 ? +1 : -1;                  // odd: +1 at 1, -1 at 3
}

MatrixAlgebraType tensor_type(const MatrixAlgebraType& a, const MatrixAlgebraType& b) {
  if (a.doubled && b.doubled)
    throw std::invalid_argument("tensor product of two doubled types is not defined here");
  DivisionRing ring;
  std::int64_t block = 1;
  bool ring_doubles = false;
  const DivisionRing x = a.ring, y = b.ring;
  if (x == DivisionRing::R) {
    ring = y;
  } else if (y == DivisionRing::R) {
    ring = x;
  } else if (x == DivisionRing::C && y == DivisionRing::C) {
    ring = DivisionRing::C;
    ring_doubles = true;  // C (x) C = C + C
  } else if (x == DivisionRing::H && y == DivisionRing::H) {
    ring = DivisionRing::R;
    block = 4;  // H (x) H = M(4,R)
  } else {
    ring = DivisionRing::C;
    block = 2;  // H (x) C = M(2,C)
  }
  bool doubled = a.doubled || b.doubled;
  if (doubled && ring_doubles)
    throw std::invalid_argument("tensor product would quadruple; not representable");
  return {a.d * b.d * block, ring, doubled || ring_doubles};
}

std::pair<MatrixAlgebraType, ReductionChain> classify_real(int p, int q) {
  check_symbolic_range(p, q);
  MatrixAlgebraType result = type_from_mod8(p, q);

  ReductionChain chain;
  std::vector<Factor> factors{Factor{true, p, q, {}}};
  chain.steps.push_back({"start", expression_str(factors)});

  // Phase 1: rewrite the single Clifford factor until only matrix types remain.
  for (;;) {
    std::size_t ci = factors.size();
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (factors[i].is_clifford) { ci = i; break; }
    if (ci == factors.size()) break;
    Factor f = factors[ci];

    if (auto base = base_case(f.p, f.q)) {
      factors[ci] = Factor{false, 0, 0, *base};
      chain.steps.push_back({"base case " + f.str(), expression_str(factors)});
    } else if (f.p >= 1 && f.q >= 1) {
      // C(p,q) = C(1,1) (x) C(p-1,q-1) = M(2,R) (x) C(p-1,q-1)
      factors[ci] = Factor{true, f.p - 1, f.q - 1, {}};
      factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(ci),
                     Factor{false, 0, 0, {2, DivisionRing::R, false}});
      chain.steps.push_back({"dimensional reduction, (1,1) factor", expression_str(factors)});
    } else if (f.q == 0 && f.p >= 8) {
      // C(p,0) = M(16,R) (x) C(p-8,0)
      factors[ci] = Factor{true, f.p - 8, 0, {}};
      factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(ci),
                     Factor{false, 0, 0, {16, DivisionRing::R, false}});
      chain.steps.push_back({"mod-8 periodicity", expression_str(factors)});
    } else if (f.q == 0) {
      // C(p,0) = C(2,0) (x) C(0,p-2): the (2,0) factor flips the residual metric.
      factors[ci] = Factor{true, 0, f.p - 2, {}};
      factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(ci),
                     Factor{false, 0, 0, {2, DivisionRing::R, false}});
      chain.steps.push_back({"dimensional reduction, (2,0) factor", expression_str(factors)});
    } else {
      // C(0,q) = C(0,2) (x) C(q-2,0): the mirror route through quaternion factors.
      factors[ci] = Factor{true, f.q - 2, 0, {}};
      factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(ci),
                     Factor{false, 0, 0, {1, DivisionRing::H, false}});
      chain.steps.push_back({"dimensional reduction, (0,2) factor", expression_str(factors)});
    }
  }

  // Phase 2: collapse the tensor expression left to right.
  while (factors.size() > 1) {
    MatrixAlgebraType combined = tensor_type(factors[0].type, factors[1].type);
    std::string rule =
        "tensor simplification: " + factors[0].str() + " * " + factors[1].str() + " = " + combined.str();
    factors.erase(factors.begin());
    factors[0] = Factor{false, 0, 0, combined};
    chain.steps.push_back({rule, expression_str(factors)});
  }

  if (factors[0].type != result)
    throw std::logic_error("reduction chain disagrees with mod-8 table for C(" + std::to_string(p) +
                           "," + std::to_string(q) + ")");
  return {result, chain};
}

MatrixAlgebraType classify_complex(int n) {
  if (n < 0 || n > kMaxSymbolicN)
    throw std::invalid_argument("complex classification supports 0 <= n <= " + std::to_string(kMaxSymbolicN));
  if (n % 2 == 0) return {pow2(n / 2), DivisionRing::C, false};
  return {pow2((n - 1) / 2), DivisionRing::C, true};
}

MatrixAlgebraType classify_even(int p, int q) {
  check_symbolic_range(p, q);
  if (p + q == 0) throw std::domain_error("the even part requires n >= 1");
  if (q >= 1) return classify_real(p, q - 1).first;
  return classify_real(q, p - 1).first;
}

SpinorTypeReport spinor_types(int p, int q) {
  check_symbolic_range(p, q);
  const int n = p + q;
  SpinorTypeReport r;
  r.dirac_dimension = pow2(n / 2);
  r.weyl_defined = n % 2 == 0;
  r.real_type_at_pq = classify_real(p, q).first.ring == DivisionRing::R;
  r.real_type_at_qp = classify_real(q, p).first.ring == DivisionRing::R;
  r.majorana_exists = r.real_type_at_pq || r.real_type_at_qp;
  r.weyl_majorana_exists = r.majorana_exists && mod8(p - q) == 0;
  r.chirality_uses_i = epsilon_square_sign(p, q) == -1;
  return r;
}

std::vector<TableRow> classification_table(TableFamily family, int n_min, int n_max) {
  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    row.complex_type = classify_complex(n);
    if (family == TableFamily::Euclidean) {
      row.first = classify_real(n, 0).first;
      row.second = classify_real(0, n).first;
      row.even = classify_even(n, 0);
      row.theta = n % 2 == 0 ? epsilon_square_sign(n, 0) : 0;
    } else {
      if (n < 1) throw std::invalid_argument("hyperbolic table needs n >= 1");
      row.first = classify_real(n - 1, 1).first;
      row.second = classify_real(1, n - 1).first;
      row.even = classify_even(n - 1, 1);
      row.theta = n % 2 == 0 ? epsilon_square_sign(n - 1, 1) : 0;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string theta_label(int theta) {
  if (theta > 0) return "eps";
  if (theta < 0) return "i*eps";
  return "-";
}

namespace {

std::vector<std::string> column_names(TableFamily family) {
  if (family == TableFamily::Euclidean)
    return {"n", "C^C", "C(n,0)", "C(0,n)", "C0(n,0)", "theta"};
  return {"n", "C^C", "C(n-1,1)", "C(1,n-1)", "C0(n-1,1)", "theta"};
}

std::vector<std::string> row_cells(const TableRow& r) {
  return {std::to_string(r.n), r.complex_type.str(), r.first.str(),
          r.second.str(),      r.even.str(),         theta_label(r.theta)};
}

}  // namespace

std::string table_to_markdown(TableFamily family, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto names = column_names(family);
  os << "|";
  for (const auto& c : names) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < names.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : row_cells(r)) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

std::string table_to_csv(TableFamily family, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto names = column_names(family);
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << "\n";
  for (const auto& r : rows) {
    auto cells = row_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  }
  return os.str();
}

std::string table_to_json(TableFamily family, const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["family"] = family == TableFamily::Euclidean ? "euclidean" : "hyperbolic";
  j["columns"] = column_names(family);
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    auto cells = row_cells(r);
    row["n"] = r.n;
    row["complex"] = cells[1];
    row["first"] = cells[2];
    row["second"] = cells[3];
    row["even"] = cells[4];
    row["theta"] = cells[5];
    out_rows.push_back(std::move(row));
  }
  j["rows"] = std::move(out_rows);
  return j.dump(2) + "\n";
}

}  // namespace cliff
