// cylfuse: command-line surface for the cylindric symmetric-function and
// fusion-coefficient library. All output is deterministic JSON (or CSV for
// tables); exit codes are 0 = success/agreement, 1 = verification failure,
// 2 = usage error.
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cylfuse/fusion.hpp"
#include "cylfuse/modular.hpp"
#include "cylfuse/rppgen.hpp"
#include "cylfuse/selftest.hpp"
#include "cylfuse/symcore.hpp"

using json = nlohmann::ordered_json;
using namespace cylfuse;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw UsageError("not an integer in partition: '" + tok + "'");
    }
    if (pos != tok.size()) throw UsageError("trailing junk in partition: '" + tok + "'");
    parts.push_back(v);
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed partition '" + s + "': " + e.what());
  }
}

json to_json(const Partition& p) { return json(p.parts()); }

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

// Doubles rounded to 12 significant digits so output is byte-stable.
double rounded12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::atof(buf);
}

struct Common {
  int k = 0;
  int n = 0;
  long long d = 0;
  std::string lambda, mu, nu;
  double tol = 0;
  std::string format = "json";
  long long seed = 0;
  bool unsafe = false;
};

void add_common(CLI::App* cmd, Common& o, bool with_kn = true) {
  if (with_kn) {
    cmd->add_option("--k", o.k, "number of variables / window length");
    cmd->add_option("--n", o.n, "level");
  }
  cmd->add_option("--d", o.d, "cylindric degree");
  cmd->add_option("--lambda", o.lambda, "partition, comma-separated descending");
  cmd->add_option("--mu", o.mu, "partition, comma-separated descending");
  cmd->add_option("--nu", o.nu, "partition, comma-separated descending");
  cmd->add_option("--tol", o.tol, "numeric tolerance");
  cmd->add_option("--format", o.format, "json|csv|pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--seed", o.seed, "seed for randomized checks (reserved)");
  cmd->add_flag("--unsafe-sizes", o.unsafe, "lift the k<=4, n<=8 safety limit");
}

void check_sizes(const Common& o) {
  if (o.unsafe) return;
  if (o.k > 4 || o.n > 8)
    throw UsageError("k <= 4 and n <= 8 unless --unsafe-sizes is given");
}

long long max_cells() {
  const char* env = std::getenv("CYLFUSE_MAX_CELLS");
  if (!env || !*env) return 200;
  return std::atoll(env);
}

void check_cells(long long cells) {
  if (cells > max_cells())
    throw UsageError("enumeration over " + std::to_string(cells) +
                     " cells exceeds CYLFUSE_MAX_CELLS");
}

void emit(const json& out, const std::string& format) {
  if (format == "pretty")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out.dump() << "\n";
}

void require_alcove(const Partition& p, int k, int n, const std::string& name) {
  if (!LoopFunction::from_partition(p, k, n).in_alcove())
    throw UsageError(name + " " + p.to_string() + " is not in the (" +
                     std::to_string(k) + "," + std::to_string(n) + ") alcove");
}

json m_expansion_json(const MExpansion& e) {
  json arr = json::array();
  for (const auto& [nu, c] : e.coeffs())
    arr.push_back({{"nu", to_json(nu)}, {"coeff", to_ll(c)}});
  return arr;
}

int cmd_chi(const Common& o) {
  Partition la = parse_partition(o.lambda);
  Partition mu = parse_partition(o.mu);
  int k = o.k > 0 ? o.k : std::max({la.length(), mu.length(), 1});
  if (k < la.length() || k < mu.length())
    throw UsageError("k smaller than the number of parts");
  Int value = chi_skew(la, mu);
  Int by_count = chi_skew_by_count(la, mu, k);
  bool agree = value == by_count;
  emit({{"value", to_ll(value)},
        {"by_count", to_ll(by_count)},
        {"agree", agree}},
       o.format);
  return agree ? 0 : 1;
}

int cmd_cyl_chi(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  Partition la = parse_partition(o.lambda);
  Partition mu = parse_partition(o.mu);
  require_alcove(la, o.k, o.n, "--lambda");
  require_alcove(mu, o.k, o.n, "--mu");
  Int value = chi_cyl(la, o.d, mu, o.k, o.n);
  Int by_count = chi_cyl_by_count(la, o.d, mu, o.k, o.n);
  bool agree = value == by_count;
  emit({{"value", to_ll(value)},
        {"by_count", to_ll(by_count)},
        {"agree", agree}},
       o.format);
  return agree ? 0 : 1;
}

int cmd_skew_h(const Common& o) {
  Partition la = parse_partition(o.lambda);
  Partition mu = parse_partition(o.mu);
  int k = o.k > 0 ? o.k : std::max(la.length(), 1);
  check_cells(la.size() - mu.size());
  MExpansion e = h_skew_expansion(la, mu, k);
  emit({{"k", k},
        {"degree", la.size() - mu.size()},
        {"m_expansion", m_expansion_json(e)}},
       o.format);
  return 0;
}

int cmd_cyl_h(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  Partition la = parse_partition(o.lambda);
  Partition mu = parse_partition(o.mu);
  require_alcove(la, o.k, o.n, "--lambda");
  require_alcove(mu, o.k, o.n, "--mu");
  long long degree = o.n * o.d + la.size() - mu.size();
  if (degree < 0) throw UsageError("negative degree: shape is empty");
  check_cells(degree);
  MExpansion e = cyl_h_expansion(la, o.d, mu, o.k, o.n);
  json h = json::array();
  for (const Partition& nu :
       partitions_of(degree, o.k, static_cast<int>(degree))) {
    Int N = n_coefficient(mu, nu, la, o.k, o.n);
    if (N != 0) h.push_back({{"nu", to_json(nu)}, {"N", to_ll(N)}});
  }
  emit({{"degree", degree},
        {"m_expansion", m_expansion_json(e)},
        {"h_expansion", h}},
       o.format);
  return 0;
}

int cmd_fusion(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  Partition la = parse_partition(o.lambda);
  Partition mu = parse_partition(o.mu);
  require_alcove(la, o.k, o.n, "--lambda");
  require_alcove(mu, o.k, o.n, "--mu");
  FusionElement p = fusion_product(FusionElement::basis(la, o.k, o.n),
                                   FusionElement::basis(mu, o.k, o.n));
  json terms = json::array();
  for (const auto& [nu, c] : p.terms())
    for (const auto& [e, coeff] : c.coeffs())
      terms.push_back(
          {{"nu", to_json(nu)}, {"d", e}, {"N", to_ll(coeff)}});
  emit({{"lambda", to_json(la)}, {"mu", to_json(mu)}, {"terms", terms}},
       o.format);
  return 0;
}

int cmd_fusion_table(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  auto alcove = alcove_partitions(o.k, o.n);
  struct Row {
    const Partition *la, *mu, *nu;
    long long d;
    Int N;
  };
  std::vector<Row> rows;
  for (const Partition& la : alcove)
    for (const Partition& mu : alcove)
      for (const Partition& nu : alcove) {
        long long num = la.size() + mu.size() - nu.size();
        if (num < 0 || num % o.n != 0) continue;
        Int N = n_coefficient(la, mu, nu, o.k, o.n);
        if (N != 0) rows.push_back({&la, &mu, &nu, num / o.n, N});
      }
  if (o.format == "csv") {
    auto cell = [](const Partition& p) {
      std::string s;
      for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(p.part(i));
      }
      return s;
    };
    std::cout << "lambda,mu,nu,d,N\n";
    for (const Row& r : rows)
      std::cout << cell(*r.la) << ',' << cell(*r.mu) << ',' << cell(*r.nu)
                << ',' << r.d << ',' << r.N << "\n";
  } else {
    json arr = json::array();
    for (const Row& r : rows)
      arr.push_back({{"lambda", to_json(*r.la)},
                     {"mu", to_json(*r.mu)},
                     {"nu", to_json(*r.nu)},
                     {"d", r.d},
                     {"N", to_ll(r.N)}});
    emit({{"k", o.k}, {"n", o.n}, {"entries", arr}}, o.format);
  }
  return 0;
}

int cmd_verlinde(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  double tol = o.tol > 0 ? o.tol : 1e-6;
  auto alcove = alcove_partitions(o.k, o.n);
  json failures = json::array();
  long long triples = 0;
  for (const Partition& la : alcove)
    for (const Partition& mu : alcove)
      for (const Partition& nu : alcove) {
        ++triples;
        VerlindeResult r = verlinde_n(la, mu, nu, o.k, o.n);
        Int expect = n_coefficient(la, mu, nu, o.k, o.n);
        double dev = std::abs(r.value -
                              std::complex<double>(
                                  static_cast<double>(to_ll(expect)), 0));
        if (!r.ok || r.rounded != to_ll(expect) || dev > tol)
          failures.push_back({{"lambda", to_json(la)},
                              {"mu", to_json(mu)},
                              {"nu", to_json(nu)},
                              {"numeric_re", rounded12(r.value.real())},
                              {"numeric_im", rounded12(r.value.imag())},
                              {"combinatorial", to_ll(expect)},
                              {"issue", r.issue}});
      }
  bool pass = failures.empty();
  emit({{"triples", triples},
        {"tol", tol},
        {"failures", failures},
        {"pass", pass}},
       o.format);
  return pass ? 0 : 1;
}

int cmd_idempotents(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  double tol = o.tol > 0 ? o.tol : 1e-9;
  IdempotentReport r = idempotent_check(o.k, o.n, tol);
  emit({{"max_dev_delta", rounded12(r.max_dev_delta)},
        {"max_dev_unity", rounded12(r.max_dev_unity)},
        {"tol", r.tol},
        {"pass", r.pass}},
       o.format);
  return r.pass ? 0 : 1;
}

int cmd_modular(const Common& o) {
  if (o.k <= 0 || o.n <= 0) throw UsageError("--k and --n are required");
  check_sizes(o);
  double tol = o.tol > 0 ? o.tol : 1e-9;
  ModularReport rep = modular_relations_report(o.k, o.n, tol);
  json rels = json::array();
  for (const RelationDeviation& r : rep.relations)
    rels.push_back({{"relation", r.relation},
                    {"max_dev", rounded12(r.max_dev)},
                    {"tol", tol},
                    {"pass", r.pass}});
  emit({{"relations", rels}, {"tol", tol}, {"pass", rep.pass}}, o.format);
  return rep.pass ? 0 : 1;
}

int cmd_selftest(const Common& o) {
  auto results = run_acceptance_criteria();
  bool all = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const CriterionResult& r : results) {
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"detail", r.detail}});
      all = all && r.pass;
    }
    emit({{"criteria", arr}, {"pass", all}}, o.format);
  } else {
    for (const CriterionResult& r : results) {
      std::printf("criterion %2d %s  %s (%s)\n", r.id,
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
      all = all && r.pass;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylindric symmetric functions and fusion coefficients"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* desc;
    int (*run)(const Common&);
    Common opts;
  };
  std::vector<Sub> subs = {
      {"chi", "rearrangement count chi_{lambda/mu}, closed form vs set count",
       cmd_chi, {}},
      {"cyl-chi", "cylindric chi_{lambda/d/mu}, closed form vs affine count",
       cmd_cyl_chi, {}},
      {"skew-h", "m-expansion of the skew complete function h_{lambda/mu}",
       cmd_skew_h, {}},
      {"cyl-h", "m-expansion and h-expansion of h_{lambda/d/mu}", cmd_cyl_h, {}},
      {"fusion", "fusion product of two basis elements", cmd_fusion, {}},
      {"fusion-table", "all nonzero structure constants for (k,n)",
       cmd_fusion_table, {}},
      {"verlinde", "numeric residue formula vs combinatorial coefficients",
       cmd_verlinde, {}},
      {"idempotents", "orthogonal idempotent evaluations at z=1",
       cmd_idempotents, {}},
      {"modular", "S/T/C matrix relations", cmd_modular, {}},
      {"selftest", "full acceptance verification grid", cmd_selftest, {}},
  };
  for (Sub& s : subs) add_common(app.add_subcommand(s.name, s.desc), s.opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (Sub& s : subs)
    if (app.get_subcommand(s.name)->parsed()) {
      try {
        return s.run(s.opts);
      } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
  return 2;
}
