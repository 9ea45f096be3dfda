#include "artin/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "artin/analytic/bounds.hpp"
#include "artin/analytic/dirichlet.hpp"
#include "artin/analytic/smoothing.hpp"
#include "artin/analytic/sums.hpp"
#include "artin/certificate_json.hpp"
#include "artin/errors.hpp"
#include "artin/group_spec.hpp"
#include "artin/induction.hpp"

namespace artin::cli {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw InputError("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string file_stem(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') s += c;
  return s.empty() ? "group" : s;
}

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Ctx {
  std::string spec;
  GroupPtr g;
  std::shared_ptr<const CharacterTable> table;
  std::shared_ptr<const MonomialCatalog> cat;
};

Ctx load(const std::string& spec, std::uint64_t seed, bool with_catalog = true) {
  Ctx c;
  c.spec = spec;
  c.g = parse_group(spec);
  c.table = std::make_shared<const CharacterTable>(character_table(c.g, seed));
  if (with_catalog) c.cat = std::make_shared<const MonomialCatalog>(c.g, c.table);
  return c;
}

// Generators of one normal subgroup, separated by ';', e.g. "(1 2 3);(1 3 2)".
Subgroup parse_normal(const GroupPtr& g, const std::string& text) {
  std::vector<Perm> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(Perm::from_cycles(g->degree(), item));
  }
  Subgroup n = subgroup_from_perms(g, gens);
  if (!is_normal(g, n)) throw InputError("--normal " + text + ": subgroup is not normal");
  return n;
}

std::string gens_str(const Subgroup& h) {
  std::string s;
  for (const Perm& p : h.group->generators()) {
    if (!s.empty()) s += ";";
    s += p.to_cycles();
  }
  return s.empty() ? "()" : s;
}

// Irreducibles whose kernel contains none of the normals.
std::vector<std::size_t> r_targets(const CharacterTable& t, const std::vector<Subgroup>& normals) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Subgroup k = kernel_and_faithful(t.irr[i], t).kernel;
    bool ok = true;
    for (const auto& n : normals)
      if (is_subset(n, k)) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

std::string cert_name(const std::string& spec, std::size_t chi) {
  return "cert_" + file_stem(spec) + "_chi" + std::to_string(chi) + ".json";
}

Json manifest(const std::string& command, const Json& params, std::uint64_t seed, const Json& verdicts) {
  return Json{{"schema", "artin.manifest"},      {"schema_version", kSchemaVersion}, {"command", command},
              {"parameters", params},            {"seed", seed},                     {"tool_version", kToolVersion},
              {"verdicts", verdicts}};
}

int falsified(const std::optional<fs::path>& dir, const std::string& report, std::ostream& out, std::ostream& err) {
  if (dir) {
    write_atomic(*dir / "falsification.txt", report + "\n");
    out << "falsification report written to " << (*dir / "falsification.txt").string() << "\n";
  } else {
    err << "FALSIFICATION\n" << report << "\n";
  }
  return 2;
}

// ---------------------------------------------------------------- table

void print_table(const CharacterTable& t, std::ostream& out) {
  const auto& cls = t.group->classes();
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class"});
  cells.push_back({"rep"});
  cells.push_back({"size"});
  cells.push_back({"order"});
  for (std::size_t c = 0; c < cls.size(); ++c) {
    cells[0].push_back(std::to_string(c));
    cells[1].push_back(t.group->element(cls[c].rep).to_cycles());
    cells[2].push_back(std::to_string(cls[c].size));
    cells[3].push_back(std::to_string(cls[c].element_order));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i)};
    for (const auto& v : t.irr[i].values) row.push_back(v.pretty());
    cells.push_back(row);
  }
  std::vector<std::size_t> w(cls.size() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], row[k].size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t k = 0; k < cells[r].size(); ++k) {
      line += cells[r][k];
      if (k + 1 < cells[r].size()) line += std::string(w[k] - cells[r][k].size() + 2, ' ');
    }
    out << line << "\n";
    if (r == 3) out << "\n";
  }
}

int cmd_table(const std::string& spec, bool json, std::uint64_t seed, std::ostream& out) {
  Ctx c = load(spec, seed, false);
  if (json) {
    out << table_json(*c.table, spec).dump(2) << "\n";
    return 0;
  }
  out << spec << ": order " << c.g->order().get_str() << ", " << c.g->num_classes() << " classes\n";
  print_table(*c.table, out);
  return 0;
}

// -------------------------------------------------------------- certify

int emit_certificates(const Ctx& c, const std::vector<std::size_t>& targets, SubgroupFilter family,
                      const std::vector<Subgroup>& normals, const std::optional<fs::path>& dir,
                      std::ostream& out, std::ostream& err) {
  for (std::size_t j : targets) {
    InductionCertificate cert;
    try {
      cert = certificate_solve(*c.cat, c.table->irr[j], family, normals);
    } catch (const FalsificationError& e) {
      return falsified(dir, c.spec + " X." + std::to_string(j) + ": " + e.report(), out, err);
    }
    Json doc = certificate_json(*c.cat, cert, c.spec);
    JsonCheck check = verify_certificate_json(doc);
    if (!cert.verified || !verify_certificate(*c.cat, cert) || !check.ok)
      return falsified(dir, c.spec + " X." + std::to_string(j) + ": certificate failed re-verification: " + check.reason,
                       out, err);
    if (dir) {
      write_atomic(*dir / cert_name(c.spec, j), doc.dump(2) + "\n");
      out << c.spec << " X." << j << ": " << cert.terms.size() << " term(s), verified -> " << cert_name(c.spec, j)
          << "\n";
    } else {
      out << doc.dump(2) << "\n";
    }
  }
  return 0;
}

int cmd_certify(const std::string& spec, const std::string& family_s, const std::vector<std::string>& normal_s,
                std::optional<long> chi, const std::optional<fs::path>& dir, std::uint64_t seed, std::ostream& out,
                std::ostream& err) {
  Ctx c = load(spec, seed);
  SubgroupFilter family = parse_filter(family_s);
  std::vector<Subgroup> normals;
  if (normal_s.empty())
    normals = c.cat->minimal_normal_subgroups();
  else
    for (const auto& s : normal_s) normals.push_back(parse_normal(c.g, s));
  std::vector<std::size_t> targets;
  if (chi) {
    if (*chi < 0 || static_cast<std::size_t>(*chi) >= c.table->size())
      throw InputError("--chi out of range (0.." + std::to_string(c.table->size() - 1) + ")");
    targets.push_back(static_cast<std::size_t>(*chi));
  } else {
    targets = r_targets(*c.table, normals);
  }
  int rc = emit_certificates(c, targets, family, normals, dir, out, err);
  if (rc == 0 && dir) {
    Json normals_j = Json::array();
    for (const auto& n : normals) normals_j.push_back(gens_str(n));
    Json params{{"spec", spec}, {"family", to_string(family)}, {"normals", normals_j}};
    if (chi) params["chi"] = *chi;
    write_atomic(*dir / "manifest.json",
                 manifest("certify", params, seed, Json{{"certificates", targets.size()}, {"verified", true}}).dump(2) +
                     "\n");
  }
  return rc;
}

int cmd_thm13(const std::string& spec, const std::optional<fs::path>& dir, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  Ctx c = load(spec, seed);
  auto faithful = faithful_irreducibles(*c.table);
  if (faithful.empty()) {
    out << spec << ": no faithful irreducible character, nothing to certify\n";
    return 0;
  }
  const auto& normals = c.cat->minimal_normal_subgroups();
  SpaceReport sp = verify_spaces(*c.cat, normals, SubgroupFilter::nilpotent);
  if (!sp.equal()) {
    std::ostringstream r;
    r << spec << ": dim R = " << sp.r_basis.size() << " but rank I = " << sp.i_rank << " (flat " << sp.flat_rank
      << "), contained=" << sp.contained;
    return falsified(dir, r.str(), out, err);
  }
  if (dir) out << spec << ": R = I, dim " << sp.r_basis.size() << "\n";
  int rc = emit_certificates(c, faithful, SubgroupFilter::nilpotent, normals, dir, out, err);
  if (rc == 0 && dir)
    write_atomic(*dir / "manifest.json",
                 manifest("verify-thm13", Json{{"spec", spec}}, seed,
                          Json{{"dim_R", sp.r_basis.size()}, {"rank_I", sp.i_rank}, {"certificates", faithful.size()}})
                         .dump(2) +
                     "\n");
  return rc;
}

int cmd_tgn(const std::string& spec, bool rank2, const std::optional<fs::path>& dir, std::uint64_t seed,
            std::ostream& out, std::ostream& err) {
  Ctx c = load(spec, seed);
  bool nil = passes(c.g, SubgroupFilter::nilpotent);
  std::ostringstream report;
  bool ok = true;
  for (const auto& n : normal_subgroups(c.g)) {
    bool t = verify_spaces(*c.cat, {n}, SubgroupFilter::all).equal();
    bool t0 = verify_spaces(*c.cat, {n}, SubgroupFilter::nilpotent).equal();
    out << "N order " << n.order() << " [" << gens_str(n) << "]: T " << (t ? "holds" : "fails") << ", T0 "
        << (t0 ? "holds" : "fails");
    if (rank2 && nil) {
      bool r2 = verify_spaces(*c.cat, {n}, SubgroupFilter::elementary_rank_le_2).equal();
      out << ", rank2 " << (r2 ? "holds" : "fails");
      if (!r2) report << "rank2 fails for N [" << gens_str(n) << "]\n";
      ok = ok && r2;
    }
    out << "\n";
    if (!t) report << "T fails for N [" << gens_str(n) << "]\n";
    if (!t0) report << "T0 fails for N [" << gens_str(n) << "]\n";
    ok = ok && t && t0;
  }
  if (rank2 && !nil) out << "rank2 variant skipped: group is not nilpotent\n";
  if (!ok) return falsified(dir, spec + "\n" + report.str(), out, err);
  return 0;
}

// --------------------------------------------------------------- mackey

int cmd_mackey(const std::string& spec, bool list, std::optional<long> i1, std::optional<long> i2,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Ctx c = load(spec, seed);
  const auto& mons = c.cat->monomials();
  if (list || !i1 || !i2) {
    for (std::size_t i = 0; i < mons.size(); ++i) {
      const Subgroup& h = c.cat->subgroups()[mons[i].subgroup];
      out << i << ": H order " << h.order() << " [" << gens_str(h) << "] psi " << mons[i].psi << ", degree "
          << mons[i].induced.at_identity().pretty() << "\n";
    }
    if (!list) {
      err << "mackey: --phi1 and --phi2 are required (indices above)\n";
      return 1;
    }
    return 0;
  }
  auto check = [&](long i) {
    if (i < 0 || static_cast<std::size_t>(i) >= mons.size())
      throw InputError("monomial index out of range (0.." + std::to_string(mons.size() - 1) + ")");
    return static_cast<std::size_t>(i);
  };
  MackeyResult m = mackey_decompose(*c.cat, check(*i1), check(*i2));
  for (const auto& t : m.terms) {
    out << t.multiplicity << " x Ind from order " << t.h.order() << " [" << gens_str(t.h) << "] psi = (";
    for (std::size_t k = 0; k < t.psi.size(); ++k) out << (k ? ", " : "") << t.psi[k].pretty();
    out << ")\n";
  }
  out << "pointwise " << (m.pointwise_ok ? "ok" : "FAILED") << ", degree " << (m.degree_ok ? "ok" : "FAILED") << "\n";
  if (!m.pointwise_ok || !m.degree_ok) return falsified(std::nullopt, spec + ": Mackey decomposition mismatch", out, err);
  return 0;
}

// ------------------------------------------------------------- analytic

std::vector<std::uint64_t> parse_grid(const std::string& g, double gate) {
  std::vector<std::string> parts;
  std::stringstream ss(g);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--grid expects a:b:step");
  auto num = [](const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !(v >= 0)) throw InputError("bad grid value " + s);
    return v;
  };
  double a = parts[0] == "gate" ? std::max(2.0, std::ceil(gate)) : num(parts[0]);
  double b = num(parts[1]);
  bool geometric = !parts[2].empty() && parts[2][0] == 'x';
  double step = num(geometric ? parts[2].substr(1) : parts[2]);
  if ((geometric && step <= 1) || (!geometric && step <= 0)) throw InputError("--grid step must grow");
  std::vector<std::uint64_t> out;
  for (double h = a; h <= b * (1 + 1e-12); h = geometric ? h * step : h + step) {
    auto v = static_cast<std::uint64_t>(std::llround(h));
    if (out.empty() || out.back() != v) out.push_back(v);
    if (out.size() > 100000) throw InputError("--grid has too many points");
  }
  return out;
}

DirichletCharacter pick_character(std::uint64_t q, std::optional<long> index, std::optional<long> kron) {
  if (kron) return DirichletCharacter::kronecker(*kron);
  auto all = DirichletCharacter::all(q);
  if (index) {
    if (*index < 0 || static_cast<std::size_t>(*index) >= all.size())
      throw InputError("--index out of range (0.." + std::to_string(all.size() - 1) + ")");
    return all[static_cast<std::size_t>(*index)];
  }
  for (const auto& c : all)
    if (c.is_primitive() && c.order() == 2) return c;
  for (const auto& c : all)
    if (c.is_primitive() && !c.is_principal()) return c;
  throw InputError("no nonprincipal primitive character mod " + std::to_string(q));
}

std::string num_str(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

int cmd_scan(std::uint64_t q, std::optional<long> index, std::optional<long> kron, double eps, double disc,
             double deg_kf, double deg_kq, const std::string& grid_s, bool synthetic,
             const std::optional<fs::path>& csv, std::ostream& out) {
  double gate = eps_bad_gate(disc, deg_kf, eps);
  auto grid = parse_grid(grid_s, gate);
  std::uint64_t hmax = grid.back();
  CharSumOracle oracle;
  std::string what;
  if (synthetic) {
    oracle = prime_count_oracle(hmax);
    what = "synthetic pi(H)";
  } else {
    DirichletCharacter chi = pick_character(q, index, kron);
    oracle = character_sum_oracle(chi, hmax);
    what = chi.label();
  }
  EpsBadReport r = eps_bad_scan(oracle, disc, deg_kf, deg_kq, eps, grid);
  std::ostringstream body;
  body << "H,lhs,rhs,ratio,verdict\n";
  for (const auto& row : r.rows)
    body << row.H << "," << row.lhs.str(12) << "," << row.rhs.str(12) << "," << num_str(row.ratio) << ","
         << row.verdict << "\n";
  if (csv)
    write_atomic(*csv, body.str());
  else
    out << body.str();
  out << "# " << what << ": gate " << num_str(r.gate) << ", " << r.rows.size() << " points, max ratio "
      << num_str(r.max_ratio) << ", " << (r.flagged ? "flagged at H=" + std::to_string(r.first_flagged) : "not flagged")
      << "\n";
  return r.flagged ? 2 : 0;
}

int cmd_bounds(const std::string& which, const BoundParams& p, double deg_k, std::ostream& out) {
  if (which == "c_eps" || which == "c_epsilon") {
    Interval c = c_epsilon_interval(p.eps, deg_k);
    out << "c_eps(eps=" << num_str(p.eps) << ", deg=" << num_str(deg_k) << ") = " << c.str(17) << "\n";
    return 0;
  }
  if (which == "holder") {
    long t = holder_t(p);
    Interval lm = holder_log_M0(p);
    out << "t = " << t << "\nlog M0 = " << lm.str(12) << "\n";
    HolderParams hp = holder_params(p);
    out << "A0t = " << hp.a0t.str(12) << "\nbound = " << hp.bound.str() << "\n";
    return 0;
  }
  if (which == "all") {
    for (BoundKind k : all_bound_kinds()) {
      out << bound_name(k) << " = ";
      try {
        out << rhs_bound(k, p).str() << "\n";
      } catch (const RangeError& e) {
        out << "gate " << e.gate() << " violated\n";
      }
    }
    return 0;
  }
  BoundKind k = parse_bound_kind(which);
  out << bound_name(k) << " = " << rhs_bound(k, p).str() << "\n";
  return 0;
}

template <class T>
std::vector<T> split_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

int cmd_bilinear(const std::string& mods_s, double H, const std::string& a_s, std::ostream& out, std::ostream& err) {
  std::vector<DirichletCharacter> fam;
  for (double q : split_list<double>(mods_s, "--mods")) {
    if (q < 1 || q != std::floor(q)) throw InputError("--mods needs positive integers");
    auto prim = DirichletCharacter::primitive(static_cast<std::uint64_t>(q));
    auto it = std::find_if(prim.begin(), prim.end(), [](const auto& c) { return !c.is_principal(); });
    if (it == prim.end()) throw InputError("no nonprincipal primitive character mod " + num_str(q));
    fam.push_back(*it);
  }
  std::vector<double> a = a_s.empty() ? std::vector<double>(fam.size(), 1.0) : split_list<double>(a_s, "--a");
  if (!(H >= 1) || H > 1e12) throw InputError("--H out of range");
  BilinearReport r = bilinear_check(fam, a, static_cast<std::uint64_t>(H));
  out << "family:";
  for (const auto& c : fam) out << " " << c.label();
  out << "\nH = " << r.H << "\nlhs = " << r.lhs.str(12) << "\nr = " << r.r << ", |E| = " << r.E.size()
      << "\ntrivial bound = " << r.trivial.str() << " (" << (r.trivial_pass ? "pass" : "FAIL") << ")\n";
  if (r.thm52)
    out << "bilinear_52 = " << r.thm52->str() << " (" << (r.thm52_pass ? "pass" : "FAIL") << ")\n";
  else
    out << "bilinear_52 not applicable: gate " << r.thm52_gate << "\n";
  if (!r.trivial_pass || (r.thm52 && !r.thm52_pass))
    return falsified(std::nullopt, "bilinear sum exceeds its bound at H = " + std::to_string(r.H), out, err);
  return 0;
}

// ---------------------------------------------------------------- suite

struct SuiteRow {
  std::string spec;
  std::string order;
  std::size_t classes = 0;
  std::map<std::string, std::string> verdict;  // column -> holds/fails/n/a
  std::vector<std::pair<std::string, std::string>> files;
  std::string report;
  double seconds = 0;
};

const std::vector<std::string> kColumns{"table", "thm13", "tgn", "rank2", "artin", "lemma61", "indicator"};

bool orthogonal(const CharacterTable& t) {
  const auto& g = t.group;
  std::size_t k = t.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (inner_product(t.irr[i], t.irr[j]) != Cyclotomic(i == j ? 1 : 0)) return false;
  const auto& cls = g->classes();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i) s += t.irr[i][a] * t.irr[i][b].conjugate();
      if (s != Cyclotomic(a == b ? static_cast<long>(cls[a].centralizer_order) : 0)) return false;
    }
  BigInt sum = 0;
  for (auto d : t.degrees) sum += BigInt(d) * BigInt(d);
  return sum == g->order();
}

SuiteRow suite_group(const std::string& spec, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteRow row;
  row.spec = spec;
  auto mark = [&](const std::string& col, bool ok, const std::string& why = {}) {
    row.verdict[col] = ok ? "holds" : "fails";
    if (!ok) row.report += spec + " " + col + ": " + why + "\n";
  };
  try {
    Ctx c = load(spec, seed);
    row.order = c.g->order().get_str();
    row.classes = c.g->num_classes();
    row.files.emplace_back("tables/" + file_stem(spec) + ".json", table_json(*c.table, spec).dump(2) + "\n");
    mark("table", orthogonal(*c.table), "orthogonality or degree sum");

    auto faithful = faithful_irreducibles(*c.table);
    const auto& minimal = c.cat->minimal_normal_subgroups();
    if (faithful.empty()) {
      row.verdict["thm13"] = "n/a";
    } else {
      bool ok = verify_spaces(*c.cat, minimal, SubgroupFilter::nilpotent).equal();
      std::string why = ok ? "" : "R != I";
      for (std::size_t j : faithful) {
        try {
          InductionCertificate cert = certificate_solve(*c.cat, c.table->irr[j], SubgroupFilter::nilpotent, minimal);
          Json doc = certificate_json(*c.cat, cert, spec);
          JsonCheck jc = verify_certificate_json(doc);
          if (!cert.verified || !verify_certificate(*c.cat, cert) || !jc.ok) {
            ok = false;
            why += " X." + std::to_string(j) + " re-verification " + jc.reason;
          }
          row.files.emplace_back("certificates/" + cert_name(spec, j), doc.dump(2) + "\n");
        } catch (const FalsificationError& e) {
          ok = false;
          why += " X." + std::to_string(j) + ": " + e.report();
        }
      }
      mark("thm13", ok, why);
    }

    bool nil = passes(c.g, SubgroupFilter::nilpotent);
    bool tgn = true, r2 = true;
    std::string tgn_why, r2_why;
    for (const auto& n : normal_subgroups(c.g)) {
      if (!verify_spaces(*c.cat, {n}, SubgroupFilter::all).equal()) tgn = false, tgn_why += " T[" + gens_str(n) + "]";
      if (!verify_spaces(*c.cat, {n}, SubgroupFilter::nilpotent).equal())
        tgn = false, tgn_why += " T0[" + gens_str(n) + "]";
      if (nil && !verify_spaces(*c.cat, {n}, SubgroupFilter::elementary_rank_le_2).equal())
        r2 = false, r2_why += " [" + gens_str(n) + "]";
    }
    mark("tgn", tgn, tgn_why);
    if (nil)
      mark("rank2", r2, r2_why);
    else
      row.verdict["rank2"] = "n/a";

    SpaceReport artin = verify_spaces(*c.cat, {}, SubgroupFilter::cyclic);
    mark("artin", artin.equal() && artin.i_rank == c.g->num_classes(), "cyclic span rank " +
                                                                          std::to_string(artin.i_rank));

    if (faithful.empty() || c.g->order() == 1) {
      row.verdict["lemma61"] = "n/a";
    } else {
      try {
        Lemma61Report l = lemma61_certificate(*c.cat);
        mark("lemma61", l.ok(), "bound check");
      } catch (const FalsificationError& e) {
        mark("lemma61", false, e.report());
      }
    }

    bool ind = true;
    for (std::size_t k = 0; k < c.g->num_classes(); ++k) {
      auto d = class_indicator_decomposition(*c.table, k);
      if (!d.exact_ok || !d.certified) ind = false;
    }
    mark("indicator", ind, "l1 bound");
  } catch (const std::exception& e) {
    for (const auto& col : kColumns)
      if (!row.verdict.count(col)) row.verdict[col] = "fails";
    row.report += spec + ": " + e.what() + "\n";
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::string analytic_csv(bool& ok) {
  std::ostringstream s;
  s << "check,value,expected,verdict\n";
  auto line = [&](const std::string& name, const std::string& v, const std::string& e, bool pass) {
    s << name << "," << v << "," << e << "," << (pass ? "pass" : "fail") << "\n";
    ok = ok && pass;
  };
  struct C {
    double eps, deg;
    double expect;
    const char* text;
  };
  for (C c : {C{0.01, 1, 1.0 / 180, "1/180"}, C{1, 2, 1 / (29 * std::sqrt(2.0)), "1/(29 sqrt 2)"},
              C{0.81, 1, 1.0 / 29, "1/29"}}) {
    Interval v = c_epsilon_interval(c.eps, c.deg);
    line("c_eps(" + num_str(c.eps) + ";" + num_str(c.deg) + ")", v.str(15), c.text,
         std::abs(v.mid() - c.expect) <= 1e-15);
  }
  for (double sv : {0.0, 0.5, 2.0, 5.0}) {
    double cf = eta_hat(std::exp(1.0), {sv, 0}).real();
    double qd = eta_hat_quadrature(std::exp(1.0), sv);
    line("eta_hat(e;" + num_str(sv) + ")", num_str(cf), num_str(qd), std::abs(cf - qd) <= 1e-9);
  }
  BoundParams p;
  for (BoundKind k : all_bound_kinds()) {
    try {
      line(std::string("bound ") + bound_name(k), rhs_bound(k, p).str(), "defaults", true);
    } catch (const RangeError& e) {
      line(std::string("bound ") + bound_name(k), "gate " + e.gate(), "defaults", true);
    }
  }
  return s.str();
}

int cmd_suite(const fs::path& dir, bool timing, std::uint64_t seed, unsigned jobs, std::ostream& out,
              std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  auto specs = catalog_specs();
  std::vector<SuiteRow> rows(specs.size());
  std::atomic<std::size_t> next{0};
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(specs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < specs.size();) rows[i] = suite_group(specs[i], seed);
    });
  for (auto& th : pool) th.join();

  bool ok = true;
  std::ostringstream csv, table, reports;
  csv << "group,order,classes";
  for (const auto& col : kColumns) csv << "," << col;
  csv << "\n";
  table << std::left << std::setw(16) << "group" << std::setw(7) << "order" << std::setw(8) << "classes";
  for (const auto& col : kColumns) table << std::setw(10) << col;
  table << "\n";
  Json verdicts = Json::object();
  for (const auto& r : rows) {
    csv << "\"" << r.spec << "\"," << r.order << "," << r.classes;
    table << std::setw(16) << r.spec << std::setw(7) << r.order << std::setw(8) << r.classes;
    for (const auto& col : kColumns) {
      const std::string& v = r.verdict.at(col);
      csv << "," << v;
      table << std::setw(10) << v;
      if (v == "fails") ok = false;
    }
    if (timing) table << std::fixed << std::setprecision(2) << r.seconds << "s" << std::defaultfloat;
    csv << "\n";
    table << "\n";
    verdicts[r.spec] = r.verdict;
    reports << r.report;
    for (const auto& [name, body] : r.files) write_atomic(dir / name, body);
  }
  bool analytic_ok = true;
  write_atomic(dir / "analytic.csv", analytic_csv(analytic_ok));
  ok = ok && analytic_ok;
  write_atomic(dir / "summary.csv", csv.str());

  Json params{{"catalog", specs}, {"timing", timing}};
  Json m = manifest("suite", params, seed, Json{{"groups", verdicts}, {"analytic", analytic_ok ? "pass" : "fail"},
                                                {"all_pass", ok}});
  if (timing) m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_atomic(dir / "manifest.json", m.dump(2) + "\n");

  out << table.str();
  out << "analytic checks: " << (analytic_ok ? "pass" : "fail") << "\n";
  if (!ok) return falsified(dir, reports.str().empty() ? "analytic check failed" : reports.str(), out, err);
  out << "all verdicts pass\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful induction certificates and analytic checks"};
  app.name("artin");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "seed for randomized class-matrix splitting")->capture_default_str();

  std::string spec;
  std::optional<std::string> out_dir;

  auto* table = app.add_subcommand("table", "print the character table");
  bool json = false;
  table->add_option("spec", spec, "group spec, e.g. Sym(4)")->required();
  table->add_flag("--json", json, "JSON export");

  auto* certify = app.add_subcommand("certify", "certificates for irreducibles in R(G;N)");
  std::string family = "nilpotent";
  std::vector<std::string> normals;
  std::optional<long> chi;
  certify->add_option("spec", spec)->required();
  certify->add_option("--family", family, "nilpotent|cyclic|elementary|rank2|all")->capture_default_str();
  certify->add_option("--normal", normals, "generators of a normal subgroup, ';' separated (repeatable)");
  certify->add_option("--chi", chi, "irreducible index (default: all of R(G;N))");
  certify->add_option("--out", out_dir, "directory for JSON certificates");

  auto* thm13 = app.add_subcommand("verify-thm13", "certify every faithful irreducible over nilpotent subgroups");
  thm13->add_option("spec", spec)->required();
  thm13->add_option("--out", out_dir);

  auto* tgn = app.add_subcommand("verify-tgn", "T(G,N) and T0(G,N) for every normal subgroup");
  bool rank2 = false;
  tgn->add_option("spec", spec)->required();
  tgn->add_flag("--rank2", rank2, "also check the rank <= 2 elementary variant (nilpotent G)");
  tgn->add_option("--out", out_dir);

  auto* mackey = app.add_subcommand("mackey", "Mackey decomposition of a product of two monomials");
  std::optional<long> phi1, phi2;
  bool list = false;
  mackey->add_option("spec", spec)->required();
  mackey->add_option("--phi1", phi1);
  mackey->add_option("--phi2", phi2);
  mackey->add_flag("--list", list, "list monomial indices");

  auto* scan = app.add_subcommand("scan-bad", "epsilon-bad scan of a prime character sum");
  std::uint64_t mod = 4;
  std::optional<long> index, kron;
  double eps = 0.5, disc = 4, deg_kf = 2, deg_kq = 2;
  std::string grid = "gate:1e6:x1.5";
  bool synthetic = false;
  std::optional<std::string> csv;
  scan->add_option("--mod", mod)->capture_default_str();
  scan->add_option("--index", index, "character index in the mod-q listing");
  scan->add_option("--kronecker", kron, "use (D/.) instead");
  scan->add_option("--eps", eps)->capture_default_str();
  scan->add_option("--disc", disc, "Delta_K")->capture_default_str();
  scan->add_option("--degKF", deg_kf)->capture_default_str();
  scan->add_option("--degK", deg_kq)->capture_default_str();
  scan->add_option("--grid", grid, "a:b:step, a may be 'gate', step 'xR' is geometric")->capture_default_str();
  scan->add_flag("--synthetic-pi", synthetic, "no-cancellation oracle pi(H)");
  scan->add_option("--csv", csv, "write CSV here instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "evaluate a right-hand-side bound");
  std::string which;
  BoundParams p;
  std::optional<double> log_h;
  double deg_k = 2;
  bounds->add_option("--which", which, "bound name, c_eps, holder or all")->required();
  bounds->add_option("--n", p.n);
  bounds->add_option("--d", p.d);
  bounds->add_option("--Q", p.Q);
  bounds->add_option("--eps", p.eps);
  bounds->add_option("--degK", deg_k, "[K:Q] for c_eps");
  bounds->add_option("--H", p.H);
  bounds->add_option("--logH", log_h, "log H, for H beyond double range");
  bounds->add_option("--M", p.M);
  bounds->add_option("--t", p.t);
  bounds->add_option("--r", p.r);
  bounds->add_option("--S", p.S);
  bounds->add_option("--Delta", p.Delta);
  bounds->add_option("--DeltaF", p.Delta_F);
  bounds->add_option("--Fdeg", p.F_degree);
  bounds->add_option("--delta", p.delta);
  bounds->add_option("--sigma", p.sigma);
  bounds->add_option("--sigma0", p.sigma0);
  bounds->add_option("--tim", p.t_imag, "imaginary part of s");
  bounds->add_option("--sum-abs", p.sum_abs);
  bounds->add_option("--sum-E", p.sum_E);
  bounds->add_option("--num-E", p.num_E);
  bounds->add_option("--a0t", p.a0t);

  auto* bil = app.add_subcommand("bilinear", "bilinear character sum against its bounds");
  std::string mods = "3,4,5", a_list;
  double bil_h = 1e5;
  bil->add_option("--mods", mods)->capture_default_str();
  bil->add_option("--H", bil_h)->capture_default_str();
  bil->add_option("--a", a_list, "coefficients, comma separated (default all 1)");

  auto* suite = app.add_subcommand("suite", "full catalog run with manifest");
  std::string suite_dir = "artin-suite";
  bool timing = false;
  unsigned jobs = 0;
  suite->add_option("--out", suite_dir)->capture_default_str();
  suite->add_flag("--timing", timing, "record wall time in the manifest");
  suite->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto dir = [&]() -> std::optional<fs::path> {
    if (out_dir) return fs::path(*out_dir);
    return std::nullopt;
  };
  try {
    if (*table) return cmd_table(spec, json, seed, out);
    if (*certify) return cmd_certify(spec, family, normals, chi, dir(), seed, out, err);
    if (*thm13) return cmd_thm13(spec, dir(), seed, out, err);
    if (*tgn) return cmd_tgn(spec, rank2, dir(), seed, out, err);
    if (*mackey) return cmd_mackey(spec, list, phi1, phi2, seed, out, err);
    if (*scan) {
      std::optional<fs::path> csv_path;
      if (csv) csv_path = fs::path(*csv);
      return cmd_scan(mod, index, kron, eps, disc, deg_kf, deg_kq, grid, synthetic, csv_path, out);
    }
    if (*bounds) {
      p.log_H = log_h;
      return cmd_bounds(which, p, deg_k, out);
    }
    if (*bil) return cmd_bilinear(mods, bil_h, a_list, out, err);
    if (*suite) return cmd_suite(suite_dir, timing, seed, jobs, out, err);
  } catch (const RangeError& e) {
    err << "gate violated: " << e.gate() << "\n" << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return 1;
  } catch (const FalsificationError& e) {
    return falsified(dir(), e.report(), out, err);
  }
  return 1;
}

}  // namespace artin::cli
