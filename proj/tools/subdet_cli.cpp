// Command-line front end for the subdeterminant toolkit.
//
// Subcommands:
//   maximize  crude initialization + alpha-local search on a matrix file
//   detlb     per-k local-search table and the maximal k-th root
//   oracle    exhaustive maxdet_k with the lexicographically first argmax
//   verify    seeded randomized checks of the determinant identities
//   fixture   hadamard / diagonal matrix file generators
//
// All JSON output uses 1-based indices and a fixed key order, so runs with an
// identical manifest are byte-identical. Traces stream to stderr as JSON
// lines; the result document goes to stdout or --out.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, 3 parse, 4 internal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <subdet/json_io.hpp>
#include <subdet/subdet.hpp>

namespace {

using namespace subdet;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BackendSel { Auto, Float, Exact };

BackendSel backend_sel(const std::string& name) {
  if (name == "float") return BackendSel::Float;
  if (name == "exact") return BackendSel::Exact;
  return BackendSel::Auto;
}

const char* backend_name(bool exact) { return exact ? "exact" : "float"; }

// Rational entries cannot be represented in the float backend, so they force
// the exact one; asking for float anyway is a usage error.
bool resolve_exact(BackendSel sel, const MatrixTextInfo& info) {
  if (sel == BackendSel::Float) {
    if (info.has_rational)
      throw UsageError("matrix has p/q entries; they require --backend exact");
    return false;
  }
  if (sel == BackendSel::Exact) return true;
  return info.has_rational;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

Rational parse_alpha(const std::string& text) {
  Rational a;
  try {
    a = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --alpha: ") + e.what());
  }
  if (a <= 0 || a >= 1) throw UsageError("alpha must lie strictly inside (0, 1)");
  return a;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) throw std::runtime_error("empty range");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (...) {
    throw UsageError("bad --k-range '" + text + "'; expected forms like '2' or '1..3'");
  }
}

void require_k_feasible(int k, std::size_t m, std::size_t n) {
  if (static_cast<std::size_t>(k) > std::min(m, n)) throw UsageError("k exceeds min(m,n)");
}

// Saturating C(n,k): anything above cap collapses to cap+1.
std::uint64_t capped_binomial(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

bool oracle_feasible(int m, int n, int k, std::uint64_t cap) {
  const std::uint64_t cm = capped_binomial(m, k, cap);
  const std::uint64_t cn = capped_binomial(n, k, cap);
  if (cm == 0 || cn == 0) return false;
  if (cm > cap || cn > cap) return false;
  return cm <= cap / cn;
}

Json manifest_json(const std::string& command, const Json& input, const Json& k,
                   const Json& alpha, const Json& backend, const Json& seed,
                   const std::string& out) {
  return Json{{"command", command},
              {"input", input},
              {"k", k},
              {"alpha", alpha},
              {"backend", backend},
              {"seed", seed},
              {"out", out.empty() ? Json(nullptr) : Json(out)}};
}

Json merged(Json manifest, const Json& body) {
  Json doc;
  doc["manifest"] = std::move(manifest);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

struct Opts {
  std::string input, out;
  int k = 0;
  std::string alpha = "1/2";
  std::string backend = "auto";
  std::uint64_t seed = 0;
  bool trace = false;
  bool certify = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  // verify
  std::string kind;
  std::string k_range = "1..3";
  int count = 100;
  int max_dim = 7;
  int cb_m = 3, cb_n = 6;
  // fixture
  std::string fixture_name;
  int fixture_c = 1;
  std::string values;
};

template <Backend T>
Json maximize_body(const Matrix<T>& a, int k, const Rational& alpha, bool trace, bool certify,
                   std::uint64_t cap) {
  Json body;
  const IndexPair s0 = crude_init(a, k);
  const DetValue<T> d0 = det_sub(a, s0);
  body["start"] = Json{{"pair", json_of(s0)}, {"det", json_of(d0)}};

  // A zero pivot determinant certifies rank(A) < k, hence maxdet_k(A) = 0.
  if (d0.is_zero()) {
    body["result"] = Json{{"pair", json_of(s0)}, {"det", json_of(d0)}};
    body["iterations"] = 0;
    body["maxdet_is_zero"] = true;
    return body;
  }

  const SearchTrace<T> tr = local_search(a, s0, SearchConfig{alpha});
  if (trace)
    for (std::size_t i = 0; i < tr.steps.size(); ++i)
      std::cerr << json_of<T>(tr.steps[i], i).dump() << "\n";
  body["result"] = Json{{"pair", json_of(tr.result())}, {"det", json_of(tr.result_det())}};
  body["iterations"] = tr.accepted_moves();
  body["maxdet_is_zero"] = false;

  if (certify) {
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    if (oracle_feasible(m, n, k, cap)) {
      body["certificate"] = json_of(local_to_global_certificate(a, tr.result(), alpha, cap));
    } else {
      body["certificate"] = nullptr;
      body["certificate_note"] = "oracle enumeration exceeds --oracle-cap";
    }
  }
  return body;
}

int do_maximize(const Opts& o) {
  const Rational alpha = parse_alpha(o.alpha);
  const std::string text = read_text_file(o.input);
  const bool exact = resolve_exact(backend_sel(o.backend), probe_matrix_text(text));
  const Json mani =
      manifest_json("maximize", o.input, o.k, o.alpha, backend_name(exact), o.seed, o.out);
  Json body;
  if (exact) {
    const auto a = parse_matrix<Rational>(text);
    require_k_feasible(o.k, a.rows(), a.cols());
    body = maximize_body(a, o.k, alpha, o.trace, o.certify, o.oracle_cap);
  } else {
    const auto a = parse_matrix<double>(text);
    require_k_feasible(o.k, a.rows(), a.cols());
    body = maximize_body(a, o.k, alpha, o.trace, o.certify, o.oracle_cap);
  }
  emit(merged(mani, body), o.out);
  return 0;
}

int do_detlb(const Opts& o) {
  const Rational alpha = parse_alpha(o.alpha);
  const std::string text = read_text_file(o.input);
  const bool exact = resolve_exact(backend_sel(o.backend), probe_matrix_text(text));
  const Json mani =
      manifest_json("detlb", o.input, nullptr, o.alpha, backend_name(exact), o.seed, o.out);
  Json body;
  if (exact)
    body["detlb"] = json_of(detlb(parse_matrix<Rational>(text), SearchConfig{alpha}));
  else
    body["detlb"] = json_of(detlb(parse_matrix<double>(text), SearchConfig{alpha}));
  emit(merged(mani, body), o.out);
  return 0;
}

int do_oracle(const Opts& o) {
  const std::string text = read_text_file(o.input);
  const bool exact = resolve_exact(backend_sel(o.backend), probe_matrix_text(text));
  const Json mani =
      manifest_json("oracle", o.input, o.k, nullptr, backend_name(exact), o.seed, o.out);
  Json body;
  const auto run = [&](const auto& a) {
    require_k_feasible(o.k, a.rows(), a.cols());
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    if (!oracle_feasible(m, n, o.k, o.oracle_cap))
      throw UsageError("C(m,k)*C(n,k) exceeds --oracle-cap");
    body["oracle"] = json_of(maxdet_oracle(a, o.k, o.oracle_cap));
  };
  if (exact)
    run(parse_matrix<Rational>(text));
  else
    run(parse_matrix<double>(text));
  emit(merged(mani, body), o.out);
  return 0;
}

int do_verify(const Opts& o) {
  if (o.count < 1) throw UsageError("--count must be positive");
  Rng rng(o.seed);

  Json mani = manifest_json("verify", nullptr, nullptr, nullptr, "exact", o.seed, o.out);
  mani["kind"] = o.kind;
  mani["count"] = o.count;

  Json configurations = Json::array();
  long long passes = 0, failures = 0;
  Json first_failure;
  std::optional<Rational> max_ratio;

  const auto tally = [&](bool holds, const IdentityReport& rep, long long& p, long long& f) {
    if (holds) {
      ++p;
    } else {
      ++f;
      if (first_failure.is_null()) first_failure = json_of(rep);
    }
  };

  if (o.kind == "plucker-disjoint" || o.kind == "plucker-general") {
    const auto [klo, khi] = parse_k_range(o.k_range);
    mani["k_range"] = o.k_range;
    const bool general = o.kind == "plucker-general";
    for (int k = klo; k <= khi; ++k) {
      std::vector<std::pair<int, int>> profiles;
      if (general) {
        for (int r = 0; r <= k; ++r)
          for (int c = 0; c <= k; ++c)
            if (r != k || c != k) profiles.emplace_back(r, c);
      } else {
        profiles.emplace_back(0, 0);
      }
      for (const auto& [r, c] : profiles) {
        long long p = 0, f = 0;
        for (int i = 0; i < o.count; ++i) {
          const auto a = random_int_matrix<Rational>(rng, 2 * k, 2 * k, -9, 9);
          const auto [s, t] = random_overlap_pairs(rng, 2 * k, 2 * k, k, r, c);
          const IdentityReport rep =
              general ? verify_general_identity(a, s, t) : verify_disjoint_identity(a, s, t);
          tally(rep.holds, rep, p, f);
        }
        configurations.push_back(Json{
            {"k", k}, {"r", r}, {"c", c}, {"count", o.count}, {"passes", p}, {"failures", f}});
        passes += p;
        failures += f;
      }
    }
  } else if (o.kind == "exchange") {
    const auto [klo, khi] = parse_k_range(o.k_range);
    mani["k_range"] = o.k_range;
    mani["max_dim"] = o.max_dim;
    if (o.max_dim <= khi)
      throw UsageError("--max-dim must exceed the largest k in --k-range");
    for (int k = klo; k <= khi; ++k) {
      long long p = 0, f = 0;
      for (int i = 0; i < o.count; ++i) {
        int m = rng.uniform_int(k, o.max_dim);
        int n = rng.uniform_int(k, o.max_dim);
        if (m == k && n == k) n = k + 1;  // S != T must be possible
        const auto a = random_int_matrix<Rational>(rng, m, n, -9, 9);
        const auto [s, t] = random_distinct_pairs(rng, m, n, k);
        const IdentityReport rep = verify_exchange_inequality(a, s, t);
        if (rep.gamma > 0) {
          const Rational ratio = rep.lhs / rep.gamma;
          if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
        }
        tally(rep.holds, rep, p, f);
      }
      configurations.push_back(
          Json{{"k", k}, {"count", o.count}, {"passes", p}, {"failures", f}});
      passes += p;
      failures += f;
    }
  } else {  // cauchy-binet
    if (o.cb_m < 1 || o.cb_m > o.cb_n) throw UsageError("cauchy-binet needs 1 <= m <= n");
    mani["m"] = o.cb_m;
    mani["n"] = o.cb_n;
    long long p = 0, f = 0;
    for (int i = 0; i < o.count; ++i) {
      const auto a = random_int_matrix<Rational>(rng, o.cb_m, o.cb_n, -9, 9);
      const auto b = random_int_matrix<Rational>(rng, o.cb_n, o.cb_m, -9, 9);
      const CauchyBinetReport rep = cauchy_binet_check(a, b);
      if (rep.holds) {
        ++p;
      } else {
        ++f;
        if (first_failure.is_null()) first_failure = json_of(rep);
      }
    }
    configurations.push_back(
        Json{{"m", o.cb_m}, {"n", o.cb_n}, {"count", o.count}, {"passes", p}, {"failures", f}});
    passes += p;
    failures += f;
  }

  Json doc;
  doc["manifest"] = std::move(mani);
  doc["kind"] = o.kind;
  doc["configurations"] = std::move(configurations);
  doc["pass_count"] = passes;
  doc["fail_count"] = failures;
  doc["holds"] = failures == 0;
  if (o.kind == "exchange")
    doc["max_ratio"] = max_ratio ? Json{{"value", format_rational(*max_ratio)},
                                        {"approx", to_double(*max_ratio)}}
                                 : Json(nullptr);
  doc["first_failure"] = std::move(first_failure);
  emit(doc, o.out);
  return failures == 0 ? 0 : 1;
}

int do_fixture(const Opts& o) {
  Json mani = manifest_json("fixture", nullptr, nullptr, nullptr, nullptr, nullptr, o.out);
  mani["name"] = o.fixture_name;

  std::string text;
  std::size_t rows = 0, cols = 0;
  if (o.fixture_name == "hadamard") {
    if (o.k < 1) throw UsageError("--k is required for the hadamard fixture");
    if (o.fixture_c < 1) throw UsageError("--c must be a positive integer");
    mani["k"] = o.k;
    mani["c"] = o.fixture_c;
    const BackendSel sel = backend_sel(o.backend);
    // Exact text needs c to be a perfect square; otherwise fall back to float
    // decimals unless the exact backend was demanded explicitly.
    bool exact = sel != BackendSel::Float;
    Matrix<Rational> exact_fixture(1, 1, {Rational(0)});
    if (exact) {
      try {
        exact_fixture = hadamard_fixture<Rational>(o.k, o.fixture_c);
      } catch (const std::invalid_argument& e) {
        if (sel == BackendSel::Exact) throw UsageError(e.what());
        exact = false;
      }
    }
    mani["backend"] = backend_name(exact);
    if (exact) {
      rows = exact_fixture.rows();
      cols = exact_fixture.cols();
      text = format_matrix(exact_fixture);
    } else {
      const auto a = hadamard_fixture<double>(o.k, o.fixture_c);
      rows = a.rows();
      cols = a.cols();
      text = format_matrix(a);
    }
  } else {  // diagonal
    if (o.values.empty()) throw UsageError("--values is required for the diagonal fixture");
    std::vector<Rational> d;
    std::string token;
    std::istringstream stream(o.values);
    while (std::getline(stream, token, ',')) {
      try {
        d.push_back(parse_rational(token));
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad --values entry: ") + e.what());
      }
    }
    if (d.empty()) throw UsageError("--values is empty");
    mani["values"] = o.values;
    mani["backend"] = "exact";
    const auto a = diagonal_matrix<Rational>(d);
    rows = a.rows();
    cols = a.cols();
    text = format_matrix(a);
  }

  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.out);
  if (!out) throw UsageError("cannot write '" + o.out + "'");
  out << text;
  Json doc;
  doc["manifest"] = std::move(mani);
  doc["rows"] = rows;
  doc["cols"] = cols;
  doc["path"] = o.out;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k x k maximum-subdeterminant toolkit: alpha-local search over 2-exchange "
      "neighborhoods, exact identity verification, and the detlb estimator"};
  app.require_subcommand(1);
  Opts o;

  const auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend", o.backend,
                    "arithmetic backend; auto picks exact when the input has p/q entries")
        ->check(CLI::IsMember({"auto", "float", "exact"}))
        ->capture_default_str();
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "seed recorded in the manifest")->capture_default_str();
    cmd->add_option("--out", o.out, "write the JSON document here instead of stdout");
  };

  CLI::App* mx = app.add_subcommand(
      "maximize", "crude initialization + alpha-local search for a k x k subdeterminant");
  mx->add_option("input", o.input, "matrix text file")->required()->check(CLI::ExistingFile);
  mx->add_option("--k", o.k, "submatrix order")->required()->check(CLI::NonNegativeNumber);
  mx->add_option("--alpha", o.alpha, "acceptance factor, a rational in (0,1)")
      ->capture_default_str();
  mx->add_flag("--trace", o.trace, "stream per-iteration JSON lines to stderr");
  mx->add_flag("--certify", o.certify,
               "run the exhaustive oracle and report the local-to-global ratio");
  mx->add_option("--oracle-cap", o.oracle_cap, "max index pairs the oracle may enumerate")
      ->capture_default_str();
  add_backend(mx);
  add_common(mx);

  CLI::App* dl = app.add_subcommand("detlb", "max over k of the best found |det|^(1/k)");
  dl->add_option("input", o.input, "matrix text file")->required()->check(CLI::ExistingFile);
  dl->add_option("--alpha", o.alpha, "acceptance factor, a rational in (0,1)")
      ->capture_default_str();
  add_backend(dl);
  add_common(dl);

  CLI::App* orc = app.add_subcommand("oracle", "exhaustive maxdet_k enumeration");
  orc->add_option("input", o.input, "matrix text file")->required()->check(CLI::ExistingFile);
  orc->add_option("--k", o.k, "submatrix order")->required()->check(CLI::NonNegativeNumber);
  orc->add_option("--oracle-cap", o.oracle_cap, "max index pairs to enumerate")
      ->capture_default_str();
  add_backend(orc);
  add_common(orc);

  CLI::App* vf = app.add_subcommand("verify", "seeded randomized identity verification");
  vf->add_option("--kind", o.kind, "which identity family to check")
      ->required()
      ->check(CLI::IsMember({"plucker-disjoint", "plucker-general", "exchange", "cauchy-binet"}));
  vf->add_option("--count", o.count, "instances per configuration")->capture_default_str();
  vf->add_option("--k-range", o.k_range, "orders to cover, e.g. '2' or '1..3'")
      ->capture_default_str();
  vf->add_option("--max-dim", o.max_dim, "largest matrix dimension (exchange kind)")
      ->capture_default_str();
  vf->add_option("--m", o.cb_m, "rows of the left factor (cauchy-binet kind)")
      ->capture_default_str();
  vf->add_option("--n", o.cb_n, "columns of the left factor (cauchy-binet kind)")
      ->capture_default_str();
  add_common(vf);

  CLI::App* fx = app.add_subcommand("fixture", "write a generated matrix in the text format");
  fx->add_option("--name", o.fixture_name, "fixture family")
      ->required()
      ->check(CLI::IsMember({"hadamard", "diagonal"}));
  fx->add_option("--k", o.k, "hadamard order (must be a power of two)");
  fx->add_option("--c", o.fixture_c, "hadamard column scale: right block is c^(-1/2) H")
      ->capture_default_str();
  fx->add_option("--values", o.values, "comma-separated diagonal entries, e.g. '1,2,3'");
  add_backend(fx);
  add_common(fx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mx->parsed()) return do_maximize(o);
    if (dl->parsed()) return do_detlb(o);
    if (orc->parsed()) return do_oracle(o);
    if (vf->parsed()) return do_verify(o);
    return do_fixture(o);
  } catch (const MatrixParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
