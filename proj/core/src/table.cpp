#include "qecc/table.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "qecc/notation.hpp"

namespace qecc {

std::string ParamTriple::classical_string() const {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string ParamTriple::quantum_string(std::uint32_t q) const {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]_" +
         std::to_string(q);
}

Field TableRow::field() const { return Field::of_order(q); }

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::confirmed: return "confirmed";
    case VerdictStatus::mismatch: return "mismatch";
    case VerdictStatus::ambiguous: return "ambiguous";
    case VerdictStatus::infeasible: return "infeasible";
    case VerdictStatus::inconsistent_row: return "inconsistent_row";
  }
  return "?";
}

namespace {

VerdictStatus status_from_string(const std::string& s) {
  if (s == "confirmed") return VerdictStatus::confirmed;
  if (s == "mismatch") return VerdictStatus::mismatch;
  if (s == "ambiguous") return VerdictStatus::ambiguous;
  if (s == "infeasible") return VerdictStatus::infeasible;
  if (s == "inconsistent_row") return VerdictStatus::inconsistent_row;
  throw std::invalid_argument("unknown verdict status " + s);
}

RowKind kind_from_string(const std::string& s) {
  if (s == "cyclic") return RowKind::cyclic;
  if (s == "constacyclic") return RowKind::constacyclic;
  if (s == "polycyclic") return RowKind::polycyclic;
  if (s == "gqp") return RowKind::gqp;
  if (s == "qt") return RowKind::qt;
  if (s == "ls") return RowKind::ls;
  throw std::invalid_argument("unknown row kind " + s);
}

std::string kind_to_string(RowKind k) {
  switch (k) {
    case RowKind::cyclic: return "cyclic";
    case RowKind::constacyclic: return "constacyclic";
    case RowKind::polycyclic: return "polycyclic";
    case RowKind::gqp: return "gqp";
    case RowKind::qt: return "qt";
    case RowKind::ls: return "ls";
  }
  return "?";
}

// "[n,k,d]" or "[[n,k,d]]" with an optional _q suffix
ParamTriple parse_triple(std::string s) {
  std::string digits;
  std::vector<long long> nums;
  for (char c : s) {
    if (std::isdigit(c) || c == '-') {
      digits.push_back(c);
    } else if (!digits.empty()) {
      nums.push_back(std::stoll(digits));
      digits.clear();
    }
  }
  if (!digits.empty()) nums.push_back(std::stoll(digits));
  if (nums.size() == 4) nums.pop_back(); // trailing _q
  if (nums.size() != 3) throw std::invalid_argument("bad parameter triple " + s);
  return {std::size_t(nums[0]), nums[1], int(nums[2])};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string unescape(std::string s) {
  for (auto& c : s)
    if (c == '~') c = ' ';
  return s;
}

Verdict make(const TableRow& row, VerdictStatus st, std::string notes,
             std::optional<std::string> cls = std::nullopt,
             std::optional<std::string> qnt = std::nullopt) {
  return Verdict{row, std::move(cls), std::move(qnt), st, std::move(notes)};
}

std::string classical_str(const LinearCode& c) {
  auto d = c.distance_status();
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dim()) + "," + d.to_string() +
         "]";
}

// Shared tail: given the dual-containing CSS ingredient, certify and compare.
Verdict finish_css_row(const TableRow& row, const LinearCode& ingredient,
                       const std::string& classical_rebuilt, std::string notes,
                       const DistanceBudget& budget) {
  QuantumParams qp = css_dual_containing(ingredient, budget);
  std::string qs = qp.to_string();
  if (!qp.d.is_exact())
    return make(row, VerdictStatus::mismatch, notes + "distance not certified within budget",
                classical_rebuilt, qs);
  if (qp.n == row.quantum.n && qp.k == row.quantum.k && qp.d.value() == row.quantum.d)
    return make(row, VerdictStatus::confirmed, std::move(notes), classical_rebuilt, qs);
  return make(row, VerdictStatus::mismatch, notes + "rebuilt quantum " + qs,
              classical_rebuilt, qs);
}

Verdict verify_cyclic_family(const TableRow& row, const DistanceBudget& budget) {
  Field F = row.field();
  Poly g(F);
  try {
    g = parse_poly(row.g_strs.at(0), F);
  } catch (const NotationError& e) {
    return make(row, VerdictStatus::ambiguous, std::string("parse error: ") + e.what());
  }
  const std::size_t n = row.n;
  if (!row.classical) return make(row, VerdictStatus::inconsistent_row, "missing classical parameters");
  const auto& cls = *row.classical;
  if (cls.n != n || row.quantum.n != n)
    return make(row, VerdictStatus::inconsistent_row, "length bookkeeping differs across columns");
  if ((long long)n - g.degree() != cls.k)
    return make(row, VerdictStatus::inconsistent_row,
                "generator degree " + std::to_string(g.degree()) + " gives k=" +
                    std::to_string((long long)n - g.degree()) + ", row prints k=" +
                    std::to_string(cls.k));
  felem lambda = 1;
  if (row.kind == RowKind::constacyclic) lambda = parse_poly(row.lambda_str, F).coeff(0);
  LinearCode c(F, 0, Mat(F, 0, 0));
  try {
    c = constacyclic_code(n, FieldElement(F, lambda), g);
  } catch (const std::invalid_argument& e) {
    return make(row, VerdictStatus::inconsistent_row, e.what());
  }
  auto d = min_distance(c, budget);
  std::string cs = classical_str(c);
  if (!d.is_exact())
    return make(row, VerdictStatus::mismatch, "classical distance not certified within budget", cs);
  if (d.value() != cls.d)
    return make(row, VerdictStatus::mismatch, "rebuilt classical " + cs, cs);

  LinearCode du = dual(c);
  if (code_contains(c, du)) return finish_css_row(row, c, cs, "", budget);
  if (code_contains(du, c)) {
    auto dd = min_distance(du, budget);
    (void)dd;
    return finish_css_row(row, du, cs, "self-orthogonal row, ingredient is the dual; ", budget);
  }
  return make(row, VerdictStatus::mismatch, "neither dual-containing nor self-orthogonal", cs);
}

Verdict verify_polycyclic(const TableRow& row, const DistanceBudget& budget) {
  Field F = row.field();
  Poly f(F), g(F);
  try {
    f = parse_poly(row.f_strs.at(0), F);
    g = parse_poly(row.g_strs.at(0), F);
  } catch (const NotationError& e) {
    return make(row, VerdictStatus::ambiguous, std::string("parse error: ") + e.what());
  }
  if (!row.classical) return make(row, VerdictStatus::inconsistent_row, "missing classical parameters");
  const auto& cls = *row.classical;
  const std::size_t n = std::size_t(f.degree());
  if (n != row.quantum.n || n != cls.n)
    return make(row, VerdictStatus::inconsistent_row,
                "deg f = " + std::to_string(n) + " but the row prints n=" +
                    std::to_string(row.quantum.n) + " / classical n=" + std::to_string(cls.n));
  if ((long long)n - g.degree() != cls.k)
    return make(row, VerdictStatus::inconsistent_row,
                "generator degree " + std::to_string(g.degree()) + " gives k=" +
                    std::to_string((long long)n - g.degree()) + ", row prints k=" +
                    std::to_string(cls.k));
  LinearCode c(F, 0, Mat(F, 0, 0));
  try {
    c = polycyclic_code(f, g);
  } catch (const std::invalid_argument& e) {
    return make(row, VerdictStatus::inconsistent_row, e.what());
  }
  auto d = min_distance(c, budget);
  std::string cs = classical_str(c);
  if (!d.is_exact())
    return make(row, VerdictStatus::mismatch, "classical distance not certified within budget", cs);
  if (d.value() != cls.d) return make(row, VerdictStatus::mismatch, "rebuilt classical " + cs, cs);
  LinearCode du = dual(c);
  if (!code_contains(c, du))
    return make(row, VerdictStatus::mismatch, "not dual-containing", cs);
  return finish_css_row(row, c, cs, "", budget);
}

Verdict verify_gqp(const TableRow& row, const DistanceBudget& budget) {
  Field F = row.field();
  std::vector<Poly> fl, al;
  try {
    for (const auto& s : row.f_strs) fl.push_back(parse_poly(s, F));
    for (const auto& s : row.g_strs) al.push_back(parse_poly(s, F));
  } catch (const NotationError& e) {
    return make(row, VerdictStatus::ambiguous, std::string("parse error: ") + e.what());
  }
  if (fl.size() != al.size() || fl.empty())
    return make(row, VerdictStatus::inconsistent_row, "block lists have different lengths");
  if (!row.classical) return make(row, VerdictStatus::inconsistent_row, "missing classical parameters");
  const auto& cls = *row.classical;

  std::size_t n = 0;
  long long t = -1;
  for (std::size_t i = 0; i < fl.size(); ++i) {
    n += std::size_t(fl[i].degree());
    long long ti = fl[i].degree() - al[i].degree();
    if (ti <= 0)
      return make(row, VerdictStatus::inconsistent_row,
                  "block " + std::to_string(i + 1) + " generator does not fit its modulus");
    if (t < 0) t = ti;
    else if (t != ti)
      return make(row, VerdictStatus::inconsistent_row,
                  "block cofactor degrees disagree (" + std::to_string(t) + " vs " +
                      std::to_string(ti) + ")");
  }
  if (n != row.quantum.n || n != cls.n)
    return make(row, VerdictStatus::inconsistent_row,
                "sum of block degrees " + std::to_string(n) + " but the row prints n=" +
                    std::to_string(row.quantum.n));
  if (cls.k != t)
    return make(row, VerdictStatus::inconsistent_row,
                "cofactor degree " + std::to_string(t) + " but the row prints k=" +
                    std::to_string(cls.k));

  // block scaling constants from the p column (reduced mod q; default 1)
  std::vector<Poly> scaled = al;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    long long pi = i < row.p_scalars.size() ? row.p_scalars[i] : 1;
    felem s = felem(((pi % F.order()) + F.order()) % F.order());
    if (s == 0)
      return make(row, VerdictStatus::inconsistent_row,
                  "block scaling constant vanishes mod q");
    scaled[i] = scaled[i] * s;
  }

  LinearCode small = gqp_subcode(fl, scaled, std::size_t(t));
  auto d = min_distance(small, budget);
  std::string cs = classical_str(small);
  if ((long long)small.dim() != cls.k || !d.is_exact() || d.value() != cls.d)
    return make(row, VerdictStatus::mismatch, "rebuilt classical " + cs, cs);

  LinearCode big = dual(small);
  if (!code_contains(big, small))
    return make(row, VerdictStatus::mismatch, "scaled generator tuple is not self-orthogonal", cs);
  return finish_css_row(row, big, cs, "", budget);
}

} // namespace

Verdict verify_row(const TableRow& row, const DistanceBudget& budget) {
  try {
    if (row.ambiguous)
      return make(row, VerdictStatus::ambiguous, "pre-marked ambiguous generator string");
    switch (row.kind) {
      case RowKind::cyclic:
      case RowKind::constacyclic:
        return verify_cyclic_family(row, budget);
      case RowKind::polycyclic:
        return verify_polycyclic(row, budget);
      case RowKind::gqp:
        return verify_gqp(row, budget);
      case RowKind::qt:
      case RowKind::ls:
        return make(row, VerdictStatus::infeasible,
                    "no generators are published for this row; see the search subcommand");
    }
  } catch (const std::exception& e) {
    return make(row, VerdictStatus::inconsistent_row, std::string("rebuild failed: ") + e.what());
  }
  return make(row, VerdictStatus::mismatch, "unhandled row kind");
}

TableRow parse_fixture_line(const std::string& line) {
  TableRow row;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad fixture token " + tok);
    std::string key = tok.substr(0, eq), val = unescape(tok.substr(eq + 1));
    if (key == "table") row.table_id = std::stoi(val);
    else if (key == "row") row.row_index = std::stoi(val);
    else if (key == "q") row.q = std::uint32_t(std::stoul(val));
    else if (key == "kind") row.kind = kind_from_string(val);
    else if (key == "n") row.n = std::uint32_t(std::stoul(val));
    else if (key == "lambda") row.lambda_str = val;
    else if (key == "f") row.f_strs = split_list(val);
    else if (key == "g") row.g_strs = split_list(val);
    else if (key == "p") {
      for (const auto& s : split_list(val)) row.p_scalars.push_back(std::stoll(s));
    } else if (key == "classical") row.classical = parse_triple(val);
    else if (key == "quantum") row.quantum = parse_triple(val);
    else if (key == "compared") row.compared = parse_triple(val);
    else if (key == "star") row.star = val == "1";
    else if (key == "ambiguous") row.ambiguous = val == "1";
    else if (key == "meta") row.meta = val;
    else if (key == "expect") { status_from_string(val); row.expect = val; }
    else throw std::invalid_argument("unknown fixture key " + key);
  }
  if (row.q == 0) throw std::invalid_argument("fixture row without a field");
  return row;
}

std::vector<TableRow> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("qecc-tables v1", 0) != 0)
    throw std::invalid_argument("fixture missing 'qecc-tables v1' header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    rows.push_back(parse_fixture_line(line));
  }
  return rows;
}

Report reproduce_table(const std::vector<TableRow>& rows, const DistanceBudget& budget,
                       unsigned jobs) {
  Report rep;
  rep.verdicts.resize(rows.size(), Verdict{});
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(rows.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) break;
      rep.verdicts[i] = verify_row(rows[i], budget);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(rep.verdicts.begin(), rep.verdicts.end(), [](const Verdict& a, const Verdict& b) {
    if (a.row.table_id != b.row.table_id) return a.row.table_id < b.row.table_id;
    return a.row.row_index < b.row.row_index;
  });
  for (const auto& v : rep.verdicts) {
    rep.counts[v.status]++;
    rep.per_table[v.row.table_id][v.status]++;
  }
  return rep;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "table row   q  kind          expected          rebuilt           verdict           notes\n";
  for (const auto& v : verdicts) {
    std::ostringstream exp;
    exp << v.row.quantum.quantum_string(v.row.q);
    os << "  " << v.row.table_id << "  " << v.row.row_index;
    os << "  q=" << v.row.q << "  " << kind_to_string(v.row.kind);
    os << "  " << exp.str();
    os << "  " << (v.quantum_rebuilt ? *v.quantum_rebuilt : "-");
    os << "  " << to_string(v.status);
    if (!v.notes.empty()) os << "  (" << v.notes << ")";
    os << "\n";
  }
  os << "--\n";
  for (const auto& [tid, cnts] : per_table) {
    os << "table " << tid << ":";
    for (const auto& [st, c] : cnts) os << " " << to_string(st) << "=" << c;
    os << "\n";
  }
  os << "total:";
  for (const auto& [st, c] : counts) os << " " << to_string(st) << "=" << c;
  os << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["format"] = "qecc-report/1";
  auto& arr = j["rows"];
  arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json r;
    r["table"] = v.row.table_id;
    r["row"] = v.row.row_index;
    r["q"] = v.row.q;
    r["kind"] = kind_to_string(v.row.kind);
    r["expected_quantum"] = v.row.quantum.quantum_string(v.row.q);
    if (v.row.classical) r["expected_classical"] = v.row.classical->classical_string();
    if (v.classical_rebuilt) r["rebuilt_classical"] = *v.classical_rebuilt;
    if (v.quantum_rebuilt) r["rebuilt_quantum"] = *v.quantum_rebuilt;
    r["status"] = to_string(v.status);
    if (!v.notes.empty()) r["notes"] = v.notes;
    if (v.row.star) r["star"] = true;
    if (!v.row.expect.empty()) r["expect"] = v.row.expect;
    arr.push_back(std::move(r));
  }
  nlohmann::json cnts;
  for (const auto& [st, c] : counts) cnts[to_string(st)] = c;
  j["counts"] = std::move(cnts);
  return j.dump(2);
}

int Report::exit_code() const {
  for (const auto& v : verdicts)
    if (v.row.expect == "confirmed" && v.status != VerdictStatus::confirmed) return 1;
  return 0;
}

} // namespace qecc
