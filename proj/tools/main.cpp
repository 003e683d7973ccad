#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "cliff/center.hpp"
#include "cliff/classify.hpp"
#include "cliff/gamma.hpp"
#include "cliff/multivector_json.hpp"
#include "cliff/sm.hpp"
#include "cliff/sm_json.hpp"
#include "cliff/spin_geometry.hpp"
#include "cliff/spin_geometry_json.hpp"
#include "cliff/spin_group.hpp"
#include "cliff/structural.hpp"

namespace {

using cliff::Json;

Json type_to_json(const cliff::MatrixAlgebraType& t) {
  Json j;
  j["d"] = t.d;
  j["ring"] = std::string(1, cliff::ring_letter(t.ring));
  j["doubled"] = t.doubled;
  return j;
}

Json chain_to_json(const cliff::ReductionChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) {
    Json e;
    e["rule"] = s.rule;
    e["expression"] = s.expression;
    steps.push_back(std::move(e));
  }
  return steps;
}

Json matrix_to_json(const cliff::CMatrix& m) {
  auto c = m.to_complex();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const auto& v = c[static_cast<std::size_t>(i) * m.cols() + j];
      row.push_back({v.real(), v.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json orthogonal_to_json(const cliff::OrthogonalMatrix& lambda) {
  Json rows = Json::array();
  const int n = lambda.signature.n();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(lambda.at(i, j));
    rows.push_back(std::move(row));
  }
  Json j;
  j["matrix"] = std::move(rows);
  j["component"] = cliff::component_label(lambda.component);
  return j;
}

cliff::Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--signature", "expected the form p,q");
  return cliff::Signature(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

// --- subcommand bodies ------------------------------------------------------

int run_classify(int p, int q, const std::string& format) {
  auto [type, chain] = cliff::classify_real(p, q);
  if (format == "md") {
    std::cout << "C(" << p << "," << q << ") = " << type.str() << "\n\n";
    for (const auto& s : chain.steps) std::cout << "- " << s.rule << ": " << s.expression << "\n";
    return 0;
  }
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["type"] = type_to_json(type);
  j["chain"] = chain_to_json(chain);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_table(int min_n, int max_n, const std::string& family, const std::string& format) {
  cliff::TableFamily fam =
      family == "hyperbolic" ? cliff::TableFamily::Hyperbolic : cliff::TableFamily::Euclidean;
  auto rows = cliff::classification_table(fam, min_n, max_n);
  if (format == "csv")
    std::cout << cliff::table_to_csv(fam, rows);
  else if (format == "json")
    std::cout << cliff::table_to_json(fam, rows);
  else
    std::cout << cliff::table_to_markdown(fam, rows);
  return 0;
}

int run_rep(int p, int q) {
  cliff::Signature sig(p, q);
  cliff::GammaRepresentation rep = cliff::build_representation(sig);
  Json j;
  j["signature"] = {p, q};
  j["f"] = rep.f;
  Json gammas = Json::array();
  for (const auto& g : rep.gammas) gammas.push_back(matrix_to_json(g));
  j["gammas"] = std::move(gammas);
  j["epsilon"] = matrix_to_json(rep.epsilon_matrix);
  if (sig.n() % 2 == 0 && sig.n() > 0) j["theta"] = matrix_to_json(cliff::chirality(rep));
  auto channels = cliff::conjugation_channels(rep);
  if (!channels.empty()) {
    // Prefer the Majorana channel when it exists.
    const cliff::ConjugationChannel* pick = &channels.front();
    for (const auto& ch : channels)
      if (ch.c_squared == +1) pick = &ch;
    Json c;
    c["matrix"] = matrix_to_json(pick->matrix);
    c["eta"] = pick->eta;
    c["c_squared"] = pick->c_squared;
    j["conjugation"] = std::move(c);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int emit_spin_element(const cliff::SpinElement& s, double tolerance) {
  cliff::OrthogonalMatrix lambda = cliff::chi(s, tolerance);
  Json j;
  j["element"] = cliff::to_json(s.value);
  j["chi"] = orthogonal_to_json(lambda);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_spin_boost(const std::string& sig_text, double beta, int axis, bool time_first,
                   double tolerance) {
  cliff::Signature sig = parse_signature(sig_text);
  if (sig.q == 0) throw std::invalid_argument("a boost needs a time-like direction (q >= 1)");
  int internal_axis = axis;
  if (time_first) {
    auto perm = cliff::physics_relabeling(sig);
    if (axis < 0 || axis >= sig.n()) throw std::invalid_argument("axis outside signature");
    internal_axis = perm[static_cast<std::size_t>(axis)];
  }
  if (internal_axis < 0 || internal_axis >= sig.p)
    throw std::invalid_argument("boost axis must be a space-like direction");
  const int time = sig.p;  // first negative-square generator
  // (beta/2) gamma^time gamma^axis
  cliff::Md b = cliff::Md::generator(sig, time) * cliff::Md::generator(sig, internal_axis) *
                (beta / 2.0);
  return emit_spin_element(cliff::exp_bivector(b), tolerance);
}

int run_spin_rotate(const std::string& sig_text, double theta, const std::string& plane_text,
                    bool time_first, double tolerance) {
  cliff::Signature sig = parse_signature(sig_text);
  auto comma = plane_text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--plane expects mu,nu");
  int mu = std::stoi(plane_text.substr(0, comma));
  int nu = std::stoi(plane_text.substr(comma + 1));
  if (time_first) {
    auto perm = cliff::physics_relabeling(sig);
    if (mu < 0 || mu >= sig.n() || nu < 0 || nu >= sig.n())
      throw std::invalid_argument("plane axis outside signature");
    mu = perm[static_cast<std::size_t>(mu)];
    nu = perm[static_cast<std::size_t>(nu)];
  }
  if (mu == nu) throw std::invalid_argument("rotation plane axes must differ");
  cliff::Md b = cliff::Md::generator(sig, mu) * cliff::Md::generator(sig, nu) * (theta / 2.0);
  return emit_spin_element(cliff::exp_bivector(b), tolerance);
}

int run_dirac_apply(const std::string& frame_path, const std::string& conn_path,
                    const std::string& psi_path, const std::string& format) {
  cliff::FrameField frame = cliff::frame_from_json(load_json_file(frame_path));
  cliff::ConnectionField conn = cliff::connection_from_json(load_json_file(conn_path));
  cliff::SpinorField psi = cliff::spinor_field_from_json(load_json_file(psi_path));
  conn.validate();
  cliff::GammaRepresentation rep = cliff::build_representation(frame.signature);
  cliff::SpinorField out = cliff::dirac_operator(psi, conn, frame, rep);
  if (format == "csv")
    std::cout << cliff::spinor_field_to_csv(out);
  else
    std::cout << cliff::to_json(out).dump() << "\n";
  return 0;
}

int run_sm_hypercharges(const std::string& format) {
  auto report = cliff::hypercharge_audit(cliff::standard_model_registry());
  if (format == "json")
    std::cout << cliff::audit_to_json(report).dump(2) << "\n";
  else
    std::cout << cliff::audit_to_markdown(report);
  return report.all_equal ? 0 : 1;
}

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
};

int run_check(int max_n, std::uint64_t seed, double tolerance, int trials,
              const std::string& format) {
  std::vector<SuiteResult> suites;

  {
    SuiteResult s{"table-vs-oracle", 0, 0};
    int ceiling = std::min(max_n, cliff::kMaxStructuralN);
    for (int p = 0; p <= ceiling; ++p)
      for (int q = 0; p + q <= ceiling; ++q) {
        bool ok = cliff::classify_structural(cliff::Signature(p, q), trials, seed) ==
                  cliff::classify_real(p, q).first;
        (ok ? s.passed : s.failed)++;
      }
    suites.push_back(s);
  }

  {
    SuiteResult s{"periodicity-identities", 0, 0};
    for (int p = 0; p <= 20; ++p)
      for (int q = 0; p + q <= 20; ++q) {
        auto t = cliff::classify_real(p, q).first;
        bool ok = t.real_dimension() == (std::int64_t{1} << (p + q));
        if (p + q + 8 <= cliff::kMaxSymbolicN) {
          auto shifted = cliff::classify_real(p + 8, q).first;
          ok = ok && shifted.ring == t.ring && shifted.doubled == t.doubled && shifted.d == 16 * t.d;
        }
        if (p >= 1 && q >= 1)
          ok = ok && cliff::classify_real(p, q - 1).first == cliff::classify_real(q, p - 1).first;
        (ok ? s.passed : s.failed)++;
      }
    for (int n = 4; n <= 11; ++n) {
      bool ok = cliff::classify_real(n, 0).first == cliff::classify_real(1, n - 1).first;
      (ok ? s.passed : s.failed)++;
    }
    suites.push_back(s);
  }

  {
    SuiteResult s{"chi-properties", 0, 0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (cliff::Signature sig : {cliff::Signature(2, 0), cliff::Signature(3, 1), cliff::Signature(2, 2)}) {
      auto basis = cliff::lie_algebra_basis(sig);
      for (int trial = 0; trial < 30; ++trial) {
        cliff::Md b(sig);
        for (const auto& e : basis) b += e * (0.4 * u(rng));
        cliff::SpinElement se = cliff::exp_bivector(b);
        bool ok = true;
        try {
          cliff::OrthogonalMatrix lambda = cliff::chi(se, tolerance);
          double worst = 0;
          for (int i = 0; i < sig.n(); ++i)
            for (int j = 0; j < sig.n(); ++j) {
              double acc = 0;
              for (int k = 0; k < sig.n(); ++k)
                acc += lambda.at(k, i) * sig.metric_sign(k) * lambda.at(k, j);
              worst = std::max(worst, std::abs(acc - (i == j ? sig.metric_sign(i) : 0.0)));
            }
          ok = worst < tolerance;
          cliff::SpinElement neg{-se.value, se.factor_parity, {}};
          cliff::OrthogonalMatrix lneg = cliff::chi(neg, tolerance);
          for (std::size_t i = 0; i < lambda.entries.size(); ++i)
            ok = ok && lambda.entries[i] == lneg.entries[i];
        } catch (const std::exception&) {
          ok = false;
        }
        (ok ? s.passed : s.failed)++;
      }
    }
    suites.push_back(s);
  }

  bool all_ok = true;
  Json j = Json::array();
  for (const auto& s : suites) {
    all_ok = all_ok && s.failed == 0;
    if (format == "json") {
      Json e;
      e["suite"] = s.name;
      e["passed"] = s.passed;
      e["failed"] = s.failed;
      j.push_back(std::move(e));
    } else {
      std::cout << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
    }
  }
  if (format == "json") std::cout << j.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra and spinor toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  int p = 0, q = 0;
  int min_n = 4, max_n = 11;
  std::string family = "euclidean";
  std::string signature_text = "3,1";
  double beta = 1.0, theta = 3.141592653589793;
  int axis = 0;
  std::string plane = "0,1";
  bool time_first = false;
  double tolerance = 1e-10;
  std::uint64_t seed = cliff::kDefaultOracleSeed;
  int trials = cliff::kDefaultOracleTrials;
  int check_max_n = 6;
  std::string frame_path, conn_path, psi_path;

  auto* classify = app.add_subcommand("classify", "isomorphism type of C(p,q) with its derivation");
  classify->add_option("p", p, "count of +1 generators")->required();
  classify->add_option("q", q, "count of -1 generators")->required();
  classify->add_option("--format", format, "json|md")->default_str("json");

  auto* table = app.add_subcommand("table", "survey table over a range of dimensions");
  table->add_option("--min", min_n, "first n")->default_val(4);
  table->add_option("--max", max_n, "last n")->default_val(11);
  table->add_option("--family", family, "euclidean|hyperbolic")->default_str("euclidean");
  table->add_option("--format", format, "md|csv|json")->default_str("md");

  auto* rep = app.add_subcommand("rep", "explicit gamma matrices and derived operators");
  rep->add_option("p", p, "count of +1 generators")->required();
  rep->add_option("q", q, "count of -1 generators")->required();

  auto* spin = app.add_subcommand("spin", "Pin/Spin group elements and their images");
  spin->require_subcommand(1);
  auto* boost = spin->add_subcommand("boost", "exp along a time-space plane");
  boost->add_option("--beta", beta, "rapidity")->required();
  boost->add_option("--axis", axis, "space axis index")->required();
  boost->add_option("--signature", signature_text, "p,q")->required();
  boost->add_flag("--time-first", time_first, "interpret axes in the time-first labeling");
  boost->add_option("--tolerance", tolerance, "group membership tolerance");
  auto* rotate = spin->add_subcommand("rotate", "exp along a coordinate plane");
  rotate->add_option("--theta", theta, "angle")->required();
  rotate->add_option("--plane", plane, "mu,nu")->required();
  rotate->add_option("--signature", signature_text, "p,q")->required();
  rotate->add_flag("--time-first", time_first, "interpret axes in the time-first labeling");
  rotate->add_option("--tolerance", tolerance, "group membership tolerance");

  auto* dirac = app.add_subcommand("dirac", "lattice Dirac operator");
  dirac->require_subcommand(1);
  auto* apply = dirac->add_subcommand("apply", "apply the Dirac operator to a spinor field");
  apply->add_option("--frame", frame_path, "frame field JSON path")->required();
  apply->add_option("--conn", conn_path, "connection field JSON path")->required();
  apply->add_option("--psi", psi_path, "spinor field JSON path")->required();
  apply->add_option("--format", format, "json|csv")->default_str("json");

  auto* sm = app.add_subcommand("sm", "standard-model bookkeeping");
  sm->require_subcommand(1);
  auto* hyper = sm->add_subcommand("hypercharges", "left/right hypercharge sums per family");
  hyper->add_option("--format", format, "md|json")->default_str("md");

  auto* check = app.add_subcommand("check", "cross-validation suites");
  check->add_option("--max-n", check_max_n, "oracle ceiling")->default_val(6);
  check->add_option("--seed", seed, "random seed");
  check->add_option("--tolerance", tolerance, "float tolerance");
  check->add_option("--trials", trials, "oracle trial budget");
  check->add_option("--format", format, "text|json")->default_str("text");

  // Defaults that differ per subcommand.
  if (argc > 1 && std::string(argv[1]) == "table") format = "md";
  if (argc > 1 && std::string(argv[1]) == "sm") format = "md";
  if (argc > 1 && std::string(argv[1]) == "check") format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) return run_classify(p, q, format);
    if (table->parsed()) return run_table(min_n, max_n, family, format);
    if (rep->parsed()) return run_rep(p, q);
    if (spin->parsed()) {
      if (boost->parsed()) return run_spin_boost(signature_text, beta, axis, time_first, tolerance);
      return run_spin_rotate(signature_text, theta, plane, time_first, tolerance);
    }
    if (dirac->parsed()) return run_dirac_apply(frame_path, conn_path, psi_path, format);
    if (sm->parsed()) return run_sm_hypercharges(format);
    if (check->parsed()) return run_check(check_max_n, seed, tolerance, trials, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
