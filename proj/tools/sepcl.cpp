#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "sepcl/groebner.hpp"
#include "sepcl/recursion.hpp"

using namespace sepcl;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kUsage = 1, kBound = 2, kVerify = 3 };

struct Common {
  std::string format = "json";
  int jobs = 1;
  std::uint64_t seed = 7;
  int bound = 0;  // 0 keeps each module's default
  bool timing = false;
  std::string command;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json coeffs(const RatPoly& p) {
  json a = json::array();
  for (int i = 0; i <= std::max(0, p.degree()); ++i) a.push_back(to_string(p[i]));
  return a;
}

std::string joined(const RatPoly& p) {
  std::string s;
  for (int i = 0; i <= std::max(0, p.degree()); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s;
}

json solution_json(const RecursionSolution& s) {
  json j;
  j["status"] = solve_status_name(s.status);
  if (s.status == SolveStatus::Unique) {
    j["alpha"] = to_string(s.alpha);
    json a = json::array();
    for (const auto& x : s.alphas) a.push_back(to_string(x));
    j["alphas"] = a;
    j["nonnegative"] = s.nonnegative();
  } else if (s.status == SolveStatus::Underdetermined) {
    j["kernel_dim"] = s.kernel_dim;
  }
  return j;
}

json interval_json(const RootInterval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int emit(const Common& c, json params, json result, bool ok, std::chrono::steady_clock::time_point t0) {
  json env;
  env["command"] = c.command;
  env["params"] = std::move(params);
  env["result"] = std::move(result);
  env["verdict"] = ok ? "OK" : "FAIL";
  if (c.timing)
    env["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cout << env.dump(2) << "\n";
  return ok ? kPass : kVerify;
}

// ---- hstar ----

int cmd_hstar(const Common& c, const std::string& sig_text, const std::string& method, int max_dilation) {
  auto t0 = std::chrono::steady_clock::now();
  const Signature sig = Signature::parse(sig_text);
  std::vector<std::string> methods = method == "all" ? std::vector<std::string>{"formula", "triangulation", "oracle"}
                                                     : std::vector<std::string>{method};
  std::vector<std::pair<std::string, HStar>> rows;
  std::vector<std::string> skipped;
  for (const auto& m : methods) {
    if (m == "formula") {
      auto h = hstar_closed_form(sig);
      if (h)
        rows.emplace_back(m, *h);
      else if (method == "all")
        skipped.push_back(m);
      else
        throw UsageError("no closed form for " + sig.to_string());
    } else if (m == "triangulation") {
      rows.emplace_back(m, hstar_triangulation(sig, {c.bound ? c.bound : 7, c.jobs}));
    } else {
      rows.emplace_back(m, hstar_oracle(sig, {c.bound ? c.bound : 6, c.jobs}));
    }
  }
  bool agree = true;
  for (const auto& [m, h] : rows) agree = agree && h.poly == rows.front().second.poly;

  if (c.format == "plain") {
    for (const auto& [m, h] : rows) std::cout << m << ": " << joined(h.poly) << "\n";
    std::cout << "verdict: " << (agree ? "OK" : "DISAGREE") << "\n";
    return agree ? kPass : kVerify;
  }
  if (c.format == "csv") {
    std::cout << "method,degree,coefficient\n";
    for (const auto& [m, h] : rows)
      for (int i = 0; i <= h.poly.degree(); ++i) std::cout << m << "," << i << "," << to_string(h.poly[i]) << "\n";
    return agree ? kPass : kVerify;
  }
  json res;
  res["dim"] = sig.dim();
  json jr = json::array();
  for (const auto& [m, h] : rows) {
    json r;
    r["method"] = m;
    r["hstar"] = coeffs(h.poly);
    r["gamma"] = coeffs(gamma_vector(h));
    if (max_dilation > 0) {
      const RatPoly e = ehrhart_from_hstar(h);
      json counts = json::array();
      for (int k = 0; k <= max_dilation; ++k) counts.push_back(to_string(e(Rat(k))));
      r["lattice_points"] = counts;
    }
    jr.push_back(r);
  }
  res["rows"] = jr;
  res["not_applicable"] = skipped;
  res["agree"] = agree;
  return emit(c, {{"signature", sig.to_string()}, {"method", method}, {"max_dilation", max_dilation}}, res, agree, t0);
}

// ---- roots / interlace ----

RatPoly ehrhart_bounded(const Signature& sig, const Common& c) {
  return ehrhart_from_hstar(hstar_any(sig, c.bound ? c.bound : 7, c.bound ? c.bound : 6).hstar);
}

int cmd_roots(const Common& c, const std::string& sig_text) {
  auto t0 = std::chrono::steady_clock::now();
  const Signature sig = Signature::parse(sig_text);
  const RatPoly e = ehrhart_bounded(sig, c);
  auto cert = is_cl(e);
  if (c.format == "csv" || c.format == "plain") {
    if (!cert.on_cl) {
      std::cerr << "roots of E_" << sig.to_string() << " are not all on Re(z) = -1/2\n";
      return kVerify;
    }
    std::cout << cl_root_table_csv(e);
    return kPass;
  }
  json res;
  res["ehrhart"] = coeffs(e);
  res["symmetric"] = cert.symmetric;
  if (cert.symmetric) {
    res["parity"] = cert.transform.parity;
    res["H"] = coeffs(cert.transform.H);
    json roots = json::array();
    for (const auto& r : cert.roots) roots.push_back({{"w_interval", interval_json(r.interval)}, {"multiplicity", r.multiplicity}});
    res["w_roots"] = roots;
    res["real_root_count"] = cert.real_root_count;
  }
  res["on_cl"] = cert.on_cl;
  return emit(c, {{"signature", sig.to_string()}}, res, cert.on_cl, t0);
}

int cmd_interlace(const Common& c, const std::string& a_text, const std::string& b_text) {
  auto t0 = std::chrono::steady_clock::now();
  const Signature a = Signature::parse(a_text), b = Signature::parse(b_text);
  const RatPoly g = ehrhart_bounded(a, c), f = ehrhart_bounded(b, c);
  json res;
  bool ok = false;
  try {
    auto cert = interlaces_on_cl(g, f);
    ok = cert.interlaces;
    res["g_ranks"] = cert.g_ranks;
    res["f_ranks"] = cert.f_ranks;
    res["shared"] = coeffs(cert.shared);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCL) throw;
    res["reason"] = e.what();
  }
  res["interlaces"] = ok;
  return emit(c, {{"a", a.to_string()}, {"b", b.to_string()}}, res, ok, t0);
}

// ---- recursion ----

json relation_json(const RelationRow& row, const std::string& description) {
  json j;
  j["relation"] = row.relation;
  j["n"] = row.n;
  j["description"] = description;
  j["solution"] = solution_json(row.solution);
  if (row.cross_solution) j["cross_solution"] = solution_json(*row.cross_solution);
  j["back_substitutes"] = row.back_substitutes;
  json ex = json::array();
  for (const auto& [name, match] : row.expected) ex.push_back({{"value", name}, {"matches", match}});
  j["expected_values"] = ex;
  j["verified"] = row.verified();
  return j;
}

int cmd_recursion(const Common& c, const std::string& id, int n) {
  auto t0 = std::chrono::steady_clock::now();
  auto specs = known_relations(n);
  json rows = json::array();
  bool ok = true, found = false;
  for (const auto& spec : specs) {
    if (id != "all" && spec.id != id) continue;
    found = true;
    auto row = solve_relation(spec, n);
    ok = ok && row.verified();
    rows.push_back(relation_json(row, spec.description));
  }
  if (!found) throw UsageError("unknown relation " + id);
  return emit(c, {{"relation", id}, {"n", n}}, {{"rows", rows}}, ok, t0);
}

// ---- gb ----

int cmd_gb(const Common& c, const std::string& sig_text, const std::string& checks_text, int orders, bool export_basis_text) {
  auto t0 = std::chrono::steady_clock::now();
  const Signature sig = Signature::parse(sig_text);
  const auto checks = split(checks_text);
  const GroebnerLimits lim{c.bound ? c.bound : 9, c.jobs};
  auto basis = build_basis(sig);
  json res;
  res["size"] = basis.size();
  json kinds;
  for (auto k : {GBKind::K1, GBKind::K2, GBKind::K3a, GBKind::K3b, GBKind::K4, GBKind::K5})
    kinds[std::string(gb_kind_name(k))] = std::count_if(basis.begin(), basis.end(), [&](auto& e) { return e.kind == k; });
  res["kinds"] = kinds;
  json jc;
  bool ok = true;
  for (const auto& name : checks) {
    if (name == "reduced") {
      bool r = reducedness_check(basis);
      for (const auto& el : basis) r = r && el.degree() <= 3;
      jc["reduced"] = r;
      ok = ok && r;
    } else if (name == "lead") {
      bool r = leading_term_consistency(sig, {std::max(lim.max_edges, 28), c.jobs});
      jc["lead"] = r;
      ok = ok && r;
    } else if (name == "membership") {
      bool r = std::all_of(basis.begin(), basis.end(), [&](auto& el) { return toric_membership_check(sig, el); });
      jc["membership"] = r;
      ok = ok && r;
    } else if (name == "buchberger") {
      check_edge_bound(sig, lim);
      auto rep = buchberger_report(basis, c.jobs);
      jc["buchberger"] = {{"pairs", rep.pairs}, {"failures", rep.failures}, {"ok", rep.ok()}};
      ok = ok && rep.ok();
    } else if (name == "k222") {
      if (sig.to_string() != "2,2,2") throw UsageError("the k222 check needs --signature 2,2,2");
      auto rep = k222_order_scan(orders, c.seed);
      jc["k222"] = {{"orders", rep.orders.size()},
                    {"seed", rep.seed},
                    {"counterexamples", rep.counterexamples()},
                    {"canonical_element", rep.orders.front().element}};
      ok = ok && rep.counterexamples() == 0;
    } else {
      throw UsageError("unknown check " + name);
    }
  }
  res["checks"] = jc;
  if (export_basis_text) {
    json lines = json::array();
    const VariableMap vm(sig);
    for (const auto& el : basis) lines.push_back(to_string(el.lead, vm) + " - " + to_string(el.tail, vm));
    res["basis"] = lines;
  }
  json params{{"signature", sig.to_string()}, {"checks", checks}};
  if (std::find(checks.begin(), checks.end(), "k222") != checks.end()) {
    params["seed"] = c.seed;
    params["orders"] = orders;
  }
  return emit(c, params, res, ok, t0);
}

// ---- scan ----

int scan_conjecture(const Common& c, int max_total, int max_n, int max_family_total, const std::string& reading) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = conjecture_scan(max_total, max_n, max_family_total);
  std::vector<std::string> readings = reading == "both" ? std::vector<std::string>{"literal", "largest-part-excluded"}
                                                        : std::vector<std::string>{reading};
  json res, viol;
  bool ok = true;
  for (const auto& r : readings) {
    json list = json::array();
    for (const auto& row : rep.rows)
      if (row.reading == r && !row.holds)
        list.push_back({{"signature", row.sig.to_string()}, {"m", row.cross_degree}, {"sum", row.sum}, {"method", row.method}});
    viol[r] = {{"checked", std::count_if(rep.rows.begin(), rep.rows.end(), [&](auto& x) { return x.reading == r; })},
               {"violations", list.size()},
               {"list", list}};
    ok = ok && list.empty();
  }
  res["readings"] = viol;
  json il = json::array();
  for (const auto& i : rep.interlacings) {
    il.push_back({{"k", i.k}, {"n", i.n}, {"interlaces", i.interlaces}});
    ok = ok && i.interlaces;
  }
  res["interlacings"] = il;
  return emit(c, {{"kind", "conjecture"}, {"max_total", max_total}, {"max_n", max_n}, {"max_family_total", max_family_total}, {"reading", reading}},
              res, ok, t0);
}

int scan_corollary(const Common& c, int max_m, int max_n) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<int, int>> grid;
  for (int m = 1; m <= max_m; ++m)
    for (int n = m; n <= max_n; ++n) grid.emplace_back(m, n);
  std::vector<std::vector<CorollaryRow>> out(grid.size());
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < grid.size(); i += stride) out[i] = corollary_scan(grid[i].first, grid[i].second);
  };
  const std::size_t nj = static_cast<std::size_t>(std::max(1, c.jobs));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < nj; ++j) pool.emplace_back(worker, j, nj);
  worker(0, nj);
  for (auto& t : pool) t.join();

  json rows = json::array();
  bool ok = true;
  for (const auto& cell : out)
    for (const auto& r : cell) {
      json j{{"corollary", r.corollary}, {"m", r.m}, {"n", r.n}, {"solution", solution_json(r.solution)}, {"back_substitutes", r.back_substitutes}};
      if (r.cross_solution) j["cross_agrees"] = r.cross_solution->alpha == r.solution.alpha && r.cross_solution->alphas == r.solution.alphas;
      if (r.alpha2_closed_form_matches) {
        j["alpha2_formula"] = to_string(alpha2_closed_form(r.n));
        j["alpha2_matches"] = *r.alpha2_closed_form_matches;
        ok = ok && *r.alpha2_closed_form_matches;
      }
      if (r.solution.status == SolveStatus::Unique) ok = ok && r.back_substitutes;
      rows.push_back(j);
    }
  return emit(c, {{"kind", "corollary"}, {"max_m", max_m}, {"max_n", max_n}}, {{"rows", rows}}, ok, t0);
}

int scan_k222(const Common& c, int orders) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = k222_order_scan(orders, c.seed);
  json list = json::array();
  for (const auto& o : rep.orders) {
    std::string order;
    for (std::size_t i = 0; i < o.order.size(); ++i) {
      bool f = !o.flip.empty() && o.flip[i];
      Vertex a = f ? o.order[i].v : o.order[i].u, b = f ? o.order[i].u : o.order[i].v;
      order += (i ? " " : "") + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    list.push_back({{"order", order}, {"obstruction", o.obstruction}, {"element", o.element}});
  }
  bool ok = rep.counterexamples() == 0;
  return emit(c, {{"kind", "k222"}, {"seed", c.seed}, {"orders", orders}}, {{"counterexamples", rep.counterexamples()}, {"orders", list}}, ok, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact h*-polynomials, roots and recursions for symmetric edge polytopes of complete multipartite graphs"};
  app.require_subcommand(1);
  Common c;
  for (int i = 1; i < argc; ++i) c.command += (i > 1 ? " " : "") + std::string(argv[i]);

  auto common = [&](CLI::App* s) {
    s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
    s->add_option("--bound", c.bound, "size bound (vertices, or edges for gb)")->check(CLI::NonNegativeNumber);
    s->add_flag("--timing", c.timing, "add timing_ms to the output");
  };

  std::string signature, method = "all", a_text, b_text, relation = "all", checks = "reduced,lead,membership", kind, reading = "both";
  int max_dilation = 0, n = 2, orders = 100, max_total = 6, max_n = 6, max_family_total = 12, max_m = 4;
  bool export_flag = false;

  auto* hs = app.add_subcommand("hstar", "h*-polynomial by formula, triangulation or lattice-point oracle");
  hs->add_option("--signature", signature, "class sizes, e.g. 2,2,1")->required();
  hs->add_option("--method", method)->check(CLI::IsMember({"formula", "triangulation", "oracle", "all"}));
  hs->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "plain"}));
  hs->add_option("--max-dilation", max_dilation, "also list lattice points of kP for k up to this")->check(CLI::NonNegativeNumber);
  common(hs);

  auto* rs = app.add_subcommand("roots", "certify roots on Re(z) = -1/2 and print the root table");
  rs->add_option("--signature", signature)->required();
  std::string roots_format = "csv";
  rs->add_option("--format", roots_format)->check(CLI::IsMember({"json", "csv"}));
  common(rs);

  auto* is = app.add_subcommand("interlace", "certify that E_a interlaces E_b along Re(z) = -1/2");
  is->add_option("--a", a_text)->required();
  is->add_option("--b", b_text)->required();
  common(is);

  auto* rc = app.add_subcommand("recursion", "solve one of the recursive relations at a given n");
  rc->add_option("relation", relation, "bip1, bip2, bip3, a..j or all");
  rc->add_option("n", n)->check(CLI::Range(2, 1000));
  common(rc);

  auto* gb = app.add_subcommand("gb", "build and check the Groebner basis of the toric ideal");
  gb->add_option("--signature", signature)->required();
  gb->add_option("--checks", checks, "comma list of reduced, lead, membership, buchberger, k222");
  gb->add_option("--seed", c.seed, "seed for the random orders of the k222 check")->capture_default_str();
  gb->add_option("--orders", orders, "random orders for the k222 check")->check(CLI::NonNegativeNumber);
  gb->add_flag("--export", export_flag, "include the basis");
  common(gb);

  auto* sc = app.add_subcommand("scan", "parameter scans");
  sc->add_option("--kind", kind)->required()->check(CLI::IsMember({"conjecture", "corollary", "k222"}));
  sc->add_option("--max-total", max_total)->check(CLI::Range(2, 7));
  sc->add_option("--max-n", max_n)->check(CLI::Range(1, 30));
  sc->add_option("--max-family-total", max_family_total)->check(CLI::Range(2, 30));
  sc->add_option("--reading", reading)->check(CLI::IsMember({"literal", "largest-part-excluded", "both"}));
  sc->add_option("--max-m", max_m)->check(CLI::Range(1, 8));
  sc->add_option("--seed", c.seed)->capture_default_str();
  sc->add_option("--orders", orders)->check(CLI::NonNegativeNumber);
  common(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (hs->parsed()) return cmd_hstar(c, signature, method, max_dilation);
    if (rs->parsed()) {
      c.format = roots_format;
      return cmd_roots(c, signature);
    }
    if (is->parsed()) return cmd_interlace(c, a_text, b_text);
    if (rc->parsed()) return cmd_recursion(c, relation, n);
    if (gb->parsed()) return cmd_gb(c, signature, checks, orders, export_flag);
    if (kind == "conjecture") return scan_conjecture(c, max_total, max_n, max_family_total, reading);
    if (kind == "corollary") return scan_corollary(c, max_m, max_n);
    return scan_k222(c, orders);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SizeExceeded: return kBound;
      case ErrorCode::InvalidArgument:
      case ErrorCode::ParseError: return kUsage;
      default: return kVerify;
    }
  }
}
