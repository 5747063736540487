#include "spinfold/shell.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace spinfold {

FermatTower Scenario::tower() const {
  FermatTower t;
  t.ambient = weights;
  t.equations = equations;
  t.plan = plan;
  return t;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct LineCtx {
  int line;
  int value_col; // 1-based column where the value starts
  [[noreturn]] void fail(const std::string& m, int offset = 0) const { throw ScenarioError(m, line, value_col + offset); }
};

std::int64_t to_int(const std::string& s, const LineCtx& c) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    c.fail("expected an integer, got '" + s + "'");
  }
}

std::vector<int> parse_support(const std::string& s, const LineCtx& c) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') c.fail("expected a support like {0,1,2}");
  std::vector<int> out;
  for (auto& x : tokens(t.substr(1, t.size() - 2))) out.push_back(static_cast<int>(to_int(x, c)));
  if (out.empty()) c.fail("empty support");
  return out;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_format = false;
  bool saw_weights = false;
  int stage = 0; // 0: Y, 1: after sigma, 2: after resolve
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::string provenance;
    bool has_hash = false;
    std::size_t hash = raw.find('#');
    std::string body = raw;
    if (hash != std::string::npos) {
      has_hash = true;
      provenance = trim(raw.substr(hash + 1));
      body = raw.substr(0, hash);
    }
    std::string tb = trim(body);
    std::size_t colon = body.find(':');
    std::string key = colon == std::string::npos ? tb : trim(body.substr(0, colon));
    std::string value = colon == std::string::npos ? "" : body.substr(colon + 1);
    int vcol = colon == std::string::npos ? 1 : static_cast<int>(colon) + 2;
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value[0]))) {
      value.erase(0, 1);
      ++vcol;
    }
    value = trim(value);
    LineCtx ctx{lineno, vcol};
    int key_col = static_cast<int>(body.find_first_not_of(" \t")) + 1;
    if (!saw_format && key != "format") throw ScenarioError("the first entry must be 'format: 1'", lineno, key_col);
    auto need_y = [&](const std::string& what) {
      if (stage != 0)
        throw ScenarioError("stage-grammar violation: " + what + " after the sigma quotient", lineno, key_col);
    };
    auto need_provenance = [&]() {
      if (!has_hash || provenance.empty()) ctx.fail("external data needs a '# provenance' note");
    };
    if (key == "format") {
      if (saw_format) ctx.fail("format given twice");
      if (value != "1") ctx.fail("unsupported format '" + value + "'");
      saw_format = true;
    } else if (key == "name") {
      sc.name = value;
    } else if (key == "title") {
      sc.title = value;
    } else if (key == "weights") {
      std::vector<int> w;
      for (auto& t : tokens(value)) w.push_back(static_cast<int>(to_int(t, ctx)));
      try {
        sc.weights = WeightSystem(w);
      } catch (const std::exception& e) {
        ctx.fail(e.what());
      }
      saw_weights = true;
    } else if (key == "equation") {
      try {
        sc.equations.push_back(parse_equation(value));
      } catch (const ParseError& e) {
        ctx.fail(e.what(), e.column - 1);
      }
    } else if (key == "plan") {
      std::istringstream ps(value);
      std::string part;
      while (std::getline(ps, part, ',')) {
        auto t = tokens(part);
        if (t.size() != 4 || t[0] != "retire" || t[2] != "via" || t[1].rfind("eq", 0) != 0 || t[3].rfind("z", 0) != 0)
          ctx.fail("plan steps read 'retire eqN via zV'");
        PlanStep st;
        st.equation = static_cast<int>(to_int(t[1].substr(2), ctx)) - 1;
        st.variable = static_cast<int>(to_int(t[3].substr(1), ctx));
        sc.plan.push_back(st);
      }
    } else if (key == "involution") {
      try {
        sc.involution = InvolutionSpec::parse(value);
      } catch (const ParseError& e) {
        ctx.fail(e.what(), e.column - 1);
      }
    } else if (key == "data") {
      need_provenance();
      std::size_t eq = value.find('=');
      if (eq == std::string::npos) ctx.fail("data reads 'key = value'");
      auto lhs = tokens(value.substr(0, eq));
      auto rhs = tokens(value.substr(eq + 1));
      if (lhs.empty()) ctx.fail("missing data key");
      if (lhs[0] == "chi_W" && lhs.size() == 1 && rhs.size() == 1) {
        if (sc.chi_w) ctx.fail("chi_W given twice");
        sc.chi_w = ScalarDatum{{provenance, lineno}, to_int(rhs[0], ctx)};
      } else if (lhs[0] == "fixed_points" && lhs.size() == 1 && rhs.size() == 1) {
        if (sc.fixed_points) ctx.fail("fixed_points given twice");
        sc.fixed_points = ScalarDatum{{provenance, lineno}, to_int(rhs[0], ctx)};
      } else if (lhs[0] == "locus_betti" && rhs.size() == 3) {
        std::string l = trim(value.substr(0, eq));
        LocusDatum d;
        d.provenance = provenance;
        d.line = lineno;
        d.support = parse_support(l.substr(std::string("locus_betti").size()), ctx);
        d.b0 = to_int(rhs[0], ctx);
        d.b1 = to_int(rhs[1], ctx);
        d.b2 = to_int(rhs[2], ctx);
        sc.loci.push_back(d);
      } else if (lhs[0] == "fiber" && lhs.size() == 2 && rhs.size() == 3) {
        FiberDatum d;
        d.provenance = provenance;
        d.line = lineno;
        d.fiber = {lhs[1], to_int(rhs[0], ctx), to_int(rhs[1], ctx), to_int(rhs[2], ctx)};
        sc.fibers[lhs[1]] = d;
      } else {
        ctx.fail("unknown data entry '" + lhs[0] + "'");
      }
    } else if (key == "published") {
      need_provenance();
      std::size_t eq = value.find('=');
      if (eq == std::string::npos) ctx.fail("published reads 'STAGE QUANTITY = value'");
      auto lhs = tokens(value.substr(0, eq));
      auto rhs = tokens(value.substr(eq + 1));
      if (lhs.size() != 2 || rhs.size() != 1) ctx.fail("published reads 'STAGE QUANTITY = value'");
      if (lhs[0] != "Y" && lhs[0] != "Z" && lhs[0] != "M") ctx.fail("stage must be Y, Z or M");
      sc.published[lhs[0] + " " + lhs[1]] = ScalarDatum{{provenance, lineno}, to_int(rhs[0], ctx)};
    } else if (key == "expect") {
      for (auto& t : tokens(value)) {
        std::size_t e = t.find('=');
        if (e == std::string::npos) ctx.fail("expect entries read key=value");
        std::string k = t.substr(0, e);
        static const std::vector<std::string> known{"b2", "b3", "b4", "b4+", "b4-", "moduli", "chi_Y", "fixed"};
        if (std::find(known.begin(), known.end(), k) == known.end()) ctx.fail("unknown expectation '" + k + "'");
        sc.expect[k] = to_int(t.substr(e + 1), ctx);
      }
    } else if (key == "quotient") {
      need_y("quotient");
      ScenarioStep st{StepKind::QUOTIENT, lineno, {}, {}, {}, {}};
      for (auto& t : tokens(value)) {
        try {
          st.phases.push_back(parse_rational(t));
        } catch (const std::exception&) {
          ctx.fail("expected a phase in rational turns, got '" + t + "'");
        }
      }
      sc.steps.push_back(st);
    } else if (key == "blowup") {
      need_y("blowup");
      auto t = tokens(value);
      if (t.size() == 2 && t[0] == "points" && t[1] == "swapped") {
        sc.steps.push_back({StepKind::BLOWUP_SWAPPED, lineno, {}, {}, {}, {}});
      } else if (!t.empty() && t[0] == "locus") {
        std::size_t open = value.find('{'), close = value.find('}');
        if (open == std::string::npos || close == std::string::npos) ctx.fail("blowup locus needs a support {..}");
        ScenarioStep st{StepKind::BLOWUP_LOCUS, lineno, {}, {}, {}, {}};
        st.support = parse_support(value.substr(open, close - open + 1), ctx);
        auto rest = tokens(value.substr(close + 1));
        if (rest.size() != 2 || rest[0] != "fiber") ctx.fail("blowup locus reads 'locus {..} fiber LABEL'");
        st.fiber = rest[1];
        sc.steps.push_back(st);
      } else {
        ctx.fail("unknown blowup form");
      }
    } else if (key == "sigma") {
      need_y("sigma");
      if (!sc.involution) throw ScenarioError("sigma step before any involution is declared", lineno, key_col);
      sc.steps.push_back({StepKind::SIGMA, lineno, {}, {}, {}, {}});
      stage = 1;
    } else if (key == "resolve") {
      if (stage == 0)
        throw ScenarioError("stage-grammar violation: resolve before the sigma quotient", lineno, key_col);
      if (stage == 2) throw ScenarioError("stage-grammar violation: resolve given twice", lineno, key_col);
      ScenarioStep st{StepKind::RESOLVE, lineno, {}, {}, {}, {}};
      for (auto& t : tokens(value)) st.choices.push_back(static_cast<int>(to_int(t, ctx)));
      sc.steps.push_back(st);
      stage = 2;
    } else {
      throw ScenarioError("unknown entry '" + key + "'", lineno, key_col);
    }
  }
  if (!saw_format) throw ScenarioError("empty scenario", lineno, 1);
  if (!saw_weights) throw ScenarioError("missing weights", lineno, 1);
  if (sc.equations.empty()) throw ScenarioError("missing equation", lineno, 1);
  for (auto& e : sc.equations)
    for (auto& term : e.terms)
      if (term.var >= sc.weights.size())
        throw ScenarioError("variable z" + std::to_string(term.var) + " outside the ambient space", lineno, 1);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Scenario s = parse_scenario(ss.str());
  if (s.name.empty()) {
    std::string base = path.substr(path.find_last_of('/') + 1);
    s.name = base.substr(0, base.find('.'));
  }
  return s;
}

} // namespace spinfold
