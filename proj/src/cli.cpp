#include "p2b/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "p2b/chern.hpp"
#include "p2b/chow.hpp"
#include "p2b/classify.hpp"
#include "p2b/cubic.hpp"
#include "p2b/moduli.hpp"
#include "p2b/oracles.hpp"
#include "p2b/orbits.hpp"
#include "p2b/ruled.hpp"

namespace p2b::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ChernPair require_pair(const std::string& flag, const std::string& text) {
  auto p = parse_pair(text);
  if (!p)
    throw UsageError(flag + ": expected c1,c2 with no whitespace, got '" + text + "'");
  return *p;
}

std::pair<Int, Int> require_int_pair(const std::string& flag, const std::string& text) {
  auto p = require_pair(flag, text);
  return {p.c1, p.c2};
}

// Aligned text table. P2B_WIDTH sets a minimum column width.
class Table {
public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::size_t min_width = 0;
    if (const char* env = std::getenv("P2B_WIDTH")) {
      char* end = nullptr;
      long w = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && w > 0 && w < 200)
        min_width = static_cast<std::size_t>(w);
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), min_width);
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = row[i];
        if (i + 1 < row.size())
          cell.resize(width[i], ' ');
        line += (i ? "  " : "") + cell;
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << '\n';
    }
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

std::string upper(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return std::toupper(c); });
  return r;
}

std::string verdict_head(const classify::Verdict& v) {
  return upper(classify::to_string(v.value)) + " (" + std::string(classify::to_string(v.reason)) + ")";
}

std::string witness_text(const std::optional<Int>& w) { return w ? std::to_string(*w) : "-"; }

json base(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

std::string cubic_text(const cubic::BinaryCubicForm& f) {
  static const char* monomials[] = {"a^3", "a^2b", "ab^2", "b^3"};
  const auto c = f.coeffs();
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0)
      continue;
    const Int mag = c[i] < 0 ? -c[i] : c[i];
    if (s.empty())
      s += c[i] < 0 ? "-" : "";
    else
      s += c[i] < 0 ? " - " : " + ";
    s += (mag == 1 ? "" : std::to_string(mag)) + monomials[i];
  }
  return s.empty() ? "0" : s;
}

struct Options {
  bool json = false;
  std::string pair, left, right, cube, range;
  Int dmax = 10, d = 0, c1 = 0, count = 1;
  std::optional<Int> e;
  bool q3_as_printed = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_normalize(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  const auto nf = orbits::normalize(p);
  if (o.json) {
    json j = base("normalize");
    j["input"] = chern::to_json(p);
    j["rep"] = chern::to_json(nf.rep);
    j["witness_twist"] = nf.l_used;
    j["convention"] = orbits::kConvention;
    emit(out, j);
    return kExitOk;
  }
  Table t({"input", "rep", "twist", "discriminant", "convention"});
  t.add({to_string(p), to_string(nf.rep), "l=" + std::to_string(nf.l_used),
         std::to_string(orbits::discriminant(p)), orbits::kConvention});
  t.print(out);
  return kExitOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--left", o.left), q = require_pair("--right", o.right);
  const auto v = classify::weak_equivalent(p, q);
  if (o.json) {
    json j = base("equiv");
    j["left"] = chern::to_json(p);
    j["right"] = chern::to_json(q);
    j["verdict"] = classify::to_json(v);
    j["witness_twist"] = v.witness ? json(*v.witness) : json(nullptr);
    emit(out, j);
    return kExitOk;
  }
  out << verdict_head(v) << ": ";
  if (v.witness)
    out << "twist l=" << *v.witness << '\n';
  else
    out << "discriminants " << orbits::discriminant(p) << " vs " << orbits::discriminant(q)
        << ", c1 parity " << mod(p.c1, 2) << " vs " << mod(q.c1, 2) << '\n';
  return kExitOk;
}

int cmd_hcob(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--left", o.left), q = require_pair("--right", o.right);
  const auto v = classify::h_cobordant(p, q);
  if (o.json) {
    json j = base("hcob");
    j["left"] = chern::to_json(p);
    j["right"] = chern::to_json(q);
    j["verdict"] = classify::to_json(v);
    emit(out, j);
    return kExitOk;
  }
  out << verdict_head(v) << ": ";
  switch (v.value) {
  case classify::Value::Yes:
    out << "weakly equivalent; d=" << *v.witness << " solves d^2-d*c1+c2=0\n";
    break;
  case classify::Value::No:
    out << "not weakly equivalent\n";
    break;
  case classify::Value::Unknown:
    out << "weakly equivalent; no d with d^2-d*c1+c2=0\n";
    break;
  }
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--left", o.left), q = require_pair("--right", o.right);
  const auto r = classify::complex_report(p, q);
  if (o.json) {
    json j = base("report");
    j["left"] = chern::to_json(p);
    j["right"] = chern::to_json(q);
    j["relations"] = classify::to_json(r);
    emit(out, j);
    return kExitOk;
  }
  Table t({"relation", "verdict", "reason", "witness"});
  for (auto rel : classify::kRelations) {
    const auto& v = r[rel];
    t.add({std::string(classify::to_string(rel)), upper(classify::to_string(v.value)),
           std::string(classify::to_string(v.reason)), witness_text(v.witness)});
  }
  t.print(out);
  return kExitOk;
}

int cmd_chow(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  const chow::PBRing ring{p};
  const auto form = cubic::picard_cubic(p);
  const Int disc = cubic::chern_discriminant(p);
  const Int classical = cubic::cubic_discriminant_standard(form);
  std::optional<std::pair<Int, Int>> cube;
  if (!o.cube.empty())
    cube = require_int_pair("--cube", o.cube);

  if (o.json) {
    json j = base("chow");
    j["pair"] = chern::to_json(p);
    j["presentation"] = chow::presentation(ring);
    j["basis"] = chow::kBasisNames;
    j["cubic_form"] = cubic::to_json(form);
    j["discriminant"] = disc;
    j["classical_discriminant"] = classical;
    if (cube) {
      const auto [a, b] = *cube;
      j["cube"] = {{"a", a},
                   {"b", b},
                   {"ring_value", chow::triple_self_product(ring, a, b)},
                   {"form_value", cubic::form_eval(form, a, b)}};
    }
    emit(out, j);
    return kExitOk;
  }
  Table t({"quantity", "value"});
  t.add({"ring", chow::presentation(ring)});
  t.add({"cubic form", cubic_text(form)});
  t.add({"discriminant c1^2-4c2", std::to_string(disc)});
  t.add({"classical discriminant", std::to_string(classical)});
  if (cube) {
    const auto [a, b] = *cube;
    t.add({"(aH+b*tau)^3 via ring", std::to_string(chow::triple_self_product(ring, a, b)) + " H2tau"});
    t.add({"form value", std::to_string(cubic::form_eval(form, a, b))});
  }
  t.print(out);
  return kExitOk;
}

int cmd_moduli(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  if (o.dmax < 0)
    throw DomainError("--dmax must be >= 0");
  if (o.e && *o.e < -1)
    throw DomainError("--e must be >= -1");
  const auto reading = o.q3_as_printed ? moduli::Q3Reading::AsPrinted : moduli::Q3Reading::Inequality;

  std::vector<moduli::ModuliRow> rows;
  for (Int d = 0; d <= o.dmax; ++d)
    rows.push_back(moduli::moduli_row(p, d));

  if (o.json) {
    json j = base("moduli");
    j["pair"] = chern::to_json(p);
    j["q3_reading"] = o.q3_as_printed ? "as_printed" : "inequality";
    json jr = json::array();
    for (const auto& row : rows) {
      json r{{"d", row.d}, {"q1", row.q1}, {"dim", moduli::to_json(row.dim)}};
      json g = json::object();
      for (const auto& [e, v] : row.gamma)
        if (!o.e || *o.e == e)
          g[std::to_string(e)] = v;
      r["gamma"] = g;
      if (o.e && row.d > *o.e) {
        const auto q = moduli::q_values(p, row.d, *o.e, reading);
        r["q"] = {{"q1", q.q1}, {"q2", q.q2}, {"q3", q.q3}, {"q4", q.q4}, {"q5", q.q5}};
        r["codim_bound_exceeds_dim"] = moduli::codim_bound_exceeds_dim(p, row.d, *o.e);
      }
      jr.push_back(r);
    }
    j["rows"] = jr;
    emit(out, j);
    return kExitOk;
  }

  if (o.e) {
    const Int e = *o.e;
    Table t({"d", "Q1", "dim", "gamma(d;" + std::to_string(e) + ")", "Q2", "Q3", "Q4", "Q5", "flag"});
    for (const auto& row : rows) {
      if (row.d <= e) {
        t.add({std::to_string(row.d), std::to_string(row.q1), moduli::to_string(row.dim), "-", "-", "-",
               "-", "-", ""});
        continue;
      }
      const auto q = moduli::q_values(p, row.d, e, reading);
      t.add({std::to_string(row.d), std::to_string(row.q1), moduli::to_string(row.dim),
             std::to_string(row.gamma.at(e)), std::to_string(q.q2), std::to_string(q.q3),
             std::to_string(q.q4), std::to_string(q.q5),
             moduli::codim_bound_exceeds_dim(p, row.d, e) ? "codim>dim" : ""});
    }
    t.print(out);
    return kExitOk;
  }
  std::vector<std::string> header{"d", "Q1", "dim"};
  for (Int e = -1; e < o.dmax; ++e)
    header.push_back("e=" + std::to_string(e));
  Table t(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.d), std::to_string(row.q1), moduli::to_string(row.dim)};
    for (Int e = -1; e < o.dmax; ++e)
      cells.push_back(e < row.d ? std::to_string(row.gamma.at(e)) : "");
    t.add(std::move(cells));
  }
  t.print(out);
  return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  const Int t = moduli::stromme_threshold(p);
  if (o.json) {
    json j = base("threshold");
    j["pair"] = chern::to_json(p);
    j["threshold"] = t;
    emit(out, j);
    return kExitOk;
  }
  out << "threshold " << t << ": Q1(d) > 0 and gamma(d;e) > 0 for all -1 <= e < d, for every d >= threshold\n";
  return kExitOk;
}

int cmd_types(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  const auto types = moduli::non_cobordant_types(p, o.count);
  if (o.json) {
    json j = base("types");
    j["pair"] = chern::to_json(p);
    j["types"] = types;
    emit(out, j);
    return kExitOk;
  }
  out << "types";
  for (Int d : types)
    out << ' ' << d;
  out << '\n';
  return kExitOk;
}

int cmd_monad(const Options& o, std::ostream& out) {
  const ChernPair p = require_pair("--pair", o.pair);
  const chern::MonadSpec m{o.d, p};
  const ChernPair h = chern::monad_cohomology_chern(m);
  const bool matches = h == p;
  if (o.json) {
    json j = base("monad-check");
    j["bundle"] = chern::to_json(p);
    j["d"] = o.d;
    j["sub_degree"] = checked::sub(p.c1, o.d);
    j["quot_degree"] = o.d;
    j["cohomology"] = chern::to_json(h);
    j["matches"] = matches;
    emit(out, j);
  } else {
    out << "monad O(" << checked::sub(p.c1, o.d) << ") -> O(" << checked::sub(p.c1, o.d) << ") + F + O("
        << o.d << ") -> O(" << o.d << "): cohomology " << to_string(h) << (matches ? " matches " : " differs from ")
        << "F " << to_string(p) << '\n';
  }
  return matches ? kExitOk : kExitConsistency;
}

int cmd_line(const Options& o, std::ostream& out) {
  const auto h = ruled::generic_hirzebruch_type(o.c1, o.d);
  const Int neg = ruled::neg_section_anticanonical(h.index);
  if (o.json) {
    json j = base("line");
    j["c1"] = o.c1;
    j["d"] = o.d;
    j["index"] = h.index;
    j["signed_index"] = h.signed_index;
    j["neg_section_anticanonical"] = neg;
    j["fiber_anticanonical"] = ruled::fiber_anticanonical();
    emit(out, j);
    return kExitOk;
  }
  Table t({"index", "signed_index", "-K.neg_section", "-K.fiber"});
  t.add({std::to_string(h.index), std::to_string(h.signed_index), std::to_string(neg),
         std::to_string(ruled::fiber_anticanonical())});
  t.print(out);
  return kExitOk;
}

struct OrbitRow {
  ChernPair rep;
  Int disc = 0;
  Int parity = 0;
  long long members = 0;
  classify::Verdict hcob;
};

int cmd_scan(const Options& o, std::ostream& out) {
  std::array<Int, 4> r{};
  {
    std::stringstream ss(o.range);
    std::string part;
    int n = 0;
    while (std::getline(ss, part, ':')) {
      if (n == 4)
        throw UsageError("--range: expected c1min:c1max:c2min:c2max");
      Int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
        throw UsageError("--range: bad integer '" + part + "'");
      r[n++] = v;
    }
    if (n != 4 || o.range.back() == ':')
      throw UsageError("--range: expected c1min:c1max:c2min:c2max");
  }
  if (r[0] > r[1] || r[2] > r[3])
    throw DomainError("--range: each minimum must not exceed its maximum");
  const Int rows = checked::add(checked::sub(r[1], r[0]), 1);
  const Int cols = checked::add(checked::sub(r[3], r[2]), 1);
  if (rows > kMaxScanCells || cols > kMaxScanCells || rows * cols > kMaxScanCells)
    throw DomainError("--range: grid exceeds " + std::to_string(kMaxScanCells) + " cells");

  std::map<ChernPair, OrbitRow> orbits_by_rep;
  for (Int c1 = r[0]; c1 <= r[1]; ++c1)
    for (Int c2 = r[2]; c2 <= r[3]; ++c2) {
      const ChernPair p{c1, c2};
      const ChernPair rep = orbits::normalize(p).rep;
      auto [it, inserted] = orbits_by_rep.try_emplace(rep);
      if (inserted)
        it->second = {rep, orbits::discriminant(rep), mod(rep.c1, 2), 0, classify::h_cobordant(rep, rep)};
      ++it->second.members;
    }

  if (o.json) {
    json j = base("scan");
    j["range"] = {{"c1_min", r[0]}, {"c1_max", r[1]}, {"c2_min", r[2]}, {"c2_max", r[3]}};
    json arr = json::array();
    for (const auto& [rep, row] : orbits_by_rep)
      arr.push_back({{"rep", chern::to_json(rep)},
                     {"discriminant", row.disc},
                     {"parity", row.parity},
                     {"members", row.members},
                     {"h_cobordism", classify::to_json(row.hcob)}});
    j["orbits"] = arr;
    j["orbit_count"] = orbits_by_rep.size();
    emit(out, j);
    return kExitOk;
  }
  Table t({"rep", "discriminant", "parity", "members", "h_cobordism"});
  for (const auto& [rep, row] : orbits_by_rep)
    t.add({to_string(rep), std::to_string(row.disc), std::to_string(row.parity), std::to_string(row.members),
           verdict_head(row.hcob)});
  t.print(out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = oracles::verification_sweeps();
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (o.json) {
    json j = base("verify");
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"name", r.name},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"first_failure", r.first_failure.empty() ? json(nullptr) : json(r.first_failure)}});
    j["sweeps"] = arr;
    j["passed"] = ok;
    emit(out, j);
  } else {
    Table t({"sweep", "checked", "failures", "status"});
    for (const auto& r : results)
      t.add({r.name, std::to_string(r.checked), std::to_string(r.failures),
             r.passed() ? "PASS" : "FAIL " + r.first_failure});
    t.print(out);
  }
  return ok ? kExitOk : kExitConsistency;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and equivalence verdicts for projectivized rank-two bundles on P^2", "p2b"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of a text table");

  std::function<int(const Options&, std::ostream&)> handler;
  auto sub = [&](const char* name, const char* desc, int (*fn)(const Options&, std::ostream&)) {
    auto* s = app.add_subcommand(name, desc);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* normalize = sub("normalize", "Twist a pair to its representative with c1 in {0,-1}", cmd_normalize);
  normalize->add_option("--pair", o.pair, "c1,c2")->required();

  for (auto [name, desc, fn] : {std::tuple{"equiv", "Decide A1-weak equivalence", cmd_equiv},
                                std::tuple{"hcob", "Decide A1-h-cobordism where possible", cmd_hcob},
                                std::tuple{"report", "All six relations", cmd_report}}) {
    auto* s = sub(name, desc, fn);
    s->add_option("--left", o.left, "c1,c2")->required();
    s->add_option("--right", o.right, "c1,c2")->required();
  }

  auto* chow_cmd = sub("chow", "Chow ring presentation, Picard cubic form and discriminants", cmd_chow);
  chow_cmd->add_option("--pair", o.pair, "c1,c2")->required();
  chow_cmd->add_option("--cube", o.cube, "a,b: evaluate (aH + b tau)^3");

  auto* moduli_cmd = sub("moduli", "Moduli dimensions and codimension bounds by splitting type", cmd_moduli);
  moduli_cmd->add_option("--pair", o.pair, "c1,c2 with c1 in {0,-1}")->required();
  moduli_cmd->add_option("--dmax", o.dmax, "Largest splitting type")->required();
  moduli_cmd->add_option("--e", o.e, "Restrict to one lower type e and show Q1..Q5");
  moduli_cmd->add_flag("--q3-as-printed", o.q3_as_printed, "Use the literal printed Q3 polynomial");

  sub("threshold", "Least type from which all codimension bounds stay positive", cmd_threshold)
      ->add_option("--pair", o.pair, "c1,c2 with c1 in {0,-1}")
      ->required();

  auto* types = sub("types", "Splitting types of pairwise non-h-cobordant projectivizations", cmd_types);
  types->add_option("--pair", o.pair, "c1,c2 with c1 in {0,-1}")->required();
  types->add_option("--count", o.count, "Number of types")->required();

  auto* monad = sub("monad-check", "Chern classes of the deforming monad's cohomology", cmd_monad);
  monad->add_option("--pair", o.pair, "c1,c2")->required();
  monad->add_option("--d", o.d, "Twist d")->required();

  auto* line = sub("line", "Hirzebruch surface over a generic line", cmd_line);
  line->add_option("--c1", o.c1, "First Chern class")->required();
  line->add_option("--d", o.d, "Splitting type")->required();

  sub("scan", "Partition a grid of pairs into weak-equivalence orbits", cmd_scan)
      ->add_option("--range", o.range, "c1min:c1max:c2min:c2max")
      ->required();

  sub("verify", "Run the oracle-versus-closed-form sweeps", cmd_verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return handler(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const OverflowError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  }
}

} // namespace p2b::cli
