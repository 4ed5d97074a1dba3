#include "ceerlab/lab/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ceerlab {
namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Natural parse_natural(const std::string& text, std::size_t line, const std::string& what) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line, "expected a natural number for " + what + ", got '" + t + "'");
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    throw ParseError(line, what + " is out of range");
  }
}

/// "text @ stage" -> (text, stage)
Located split_at(const std::string& body, std::size_t line) {
  auto at = body.rfind('@');
  if (at == std::string::npos) throw ParseError(line, "expected 'value @ stage'");
  return {trim(body.substr(0, at)), parse_natural(body.substr(at + 1), line, "stage"), line};
}

std::map<std::string, std::string> key_values(const std::string& body, std::size_t line,
                                              std::size_t skip_words) {
  std::map<std::string, std::string> out;
  std::istringstream in(body);
  std::string tok;
  for (std::size_t i = 0; i < skip_words; ++i) in >> tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

StreamSpec parse_stream(const std::string& body, std::size_t line, bool with_pattern) {
  StreamSpec spec;
  spec.line = line;
  std::string rest = body;
  std::size_t skip = 1;
  if (with_pattern && body.rfind("template=", 0) == 0) {
    auto end = body.find(' ');
    spec.pattern = body.substr(9, end == std::string::npos ? std::string::npos : end - 9);
    rest = end == std::string::npos ? "" : body.substr(end);
    skip = 0;
  } else if (with_pattern && body.rfind("monomials", 0) == 0) {
    spec.monomials = true;
  }
  for (const auto& [k, v] : key_values(rest, line, skip)) {
    if (k == "every") spec.every = parse_natural(v, line, k);
    else if (k == "start") spec.start = parse_natural(v, line, k);
    else if (k == "until") spec.until = parse_natural(v, line, k);
    else if (k == "n0" || k == "from") spec.n0 = parse_natural(v, line, k);
    else throw ParseError(line, "unknown stream option '" + k + "'");
  }
  if (spec.every == 0) throw ParseError(line, "stream 'every' must be positive");
  return spec;
}

std::string substitute(const std::string& pattern, Natural n) {
  std::string out;
  const std::string value = std::to_string(n);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.compare(i, 3, "{n}") == 0) {
      out += value;
      i += 2;
    } else {
      out += pattern[i];
    }
  }
  return out;
}

Monomial nth_monomial(Natural i) {
  std::size_t d = 0;
  while (i >= (Natural{1} << d)) {
    i -= Natural{1} << d;
    ++d;
  }
  return Monomial(i, d);
}

std::vector<Located> expand(const StreamSpec& spec, Stage stages) {
  std::vector<Located> out;
  const Stage last = spec.until ? std::min(*spec.until, stages) : stages;
  Natural i = 0;
  for (Stage s = spec.start; s <= last; s += spec.every, ++i) {
    const Natural n = spec.n0 + i;
    std::string text;
    if (spec.monomials)
      text = nth_monomial(n).to_string();
    else if (spec.pattern.empty())
      text = std::to_string(n);
    else
      text = substitute(spec.pattern, n);
    out.push_back({text, s, spec.line});
  }
  return out;
}

template <class Spec>
std::vector<Located> materialize(const Spec& spec, Stage stages) {
  std::vector<Located> all = spec.entries;
  for (const auto& st : spec.streams) {
    auto more = expand(st, stages);
    all.insert(all.end(), more.begin(), more.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const Located& a, const Located& b) { return a.stage < b.stage; });
  return all;
}

template <class T>
std::vector<T> dense(const std::map<std::size_t, T>& m) {
  std::vector<T> out;
  if (m.empty()) return out;
  out.resize(m.rbegin()->first + 1);
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

const std::set<std::string>& known_params() {
  static const std::set<std::string> keys = {
      "construction", "stages", "maxdeg", "p", "modulus", "epsilon", "unit-exponent",
      "base", "levels", "x-bound", "join-bound"};
  return keys;
}

struct ParamReader {
  const Scenario& s;

  const Located* find(const std::string& key) const {
    auto it = s.params.find(key);
    return it == s.params.end() ? nullptr : &it->second;
  }
  Natural natural(const std::string& key, Natural fallback) const {
    const Located* l = find(key);
    return l ? parse_natural(l->text, l->line, key) : fallback;
  }
  std::size_t line(const std::string& key) const {
    const Located* l = find(key);
    return l ? l->line : 0;
  }
};

std::vector<StagedSet> staged_family(const Scenario& s, const std::string& name, Stage stages) {
  std::vector<StagedSet> out;
  auto it = s.sets.find(name);
  if (it == s.sets.end()) return out;
  for (const auto& spec : dense(it->second)) {
    StagedSet set;
    for (const auto& e : materialize(spec, stages)) set.add(parse_natural(e.text, e.line, "set value"), e.stage);
    out.push_back(std::move(set));
  }
  return out;
}

Stage stage_budget(const Scenario& s, Stage fallback) {
  return ParamReader{s}.natural("stages", fallback);
}

}  // namespace

std::string Scenario::construction() const {
  auto it = params.find("construction");
  if (it == params.end()) throw ParseError(0, "scenario '" + name + "' names no construction");
  return it->second.text;
}

void Scenario::set_param(const std::string& key, const std::string& value) {
  if (!known_params().count(key)) throw InvalidInput("unknown parameter '" + key + "'");
  params[key] = {value, 0, 0};
}

Scenario parse_scenario(std::istream& in, const std::string& name) {
  Scenario sc;
  sc.name = name;
  std::string raw;
  std::size_t line = 0;
  enum class Kind { top, set, polys, units, ceer, phi, functional } kind = Kind::top;
  std::string family;
  std::size_t index = 0;
  CeerTable* ceer = nullptr;
  bool ceer_has_pairs = false;

  while (std::getline(in, raw)) {
    ++line;
    std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line, "unterminated section header");
      std::istringstream hdr(body.substr(1, body.size() - 2));
      std::string type;
      hdr >> type >> family;
      std::string idx;
      hdr >> idx;
      index = idx.empty() ? 0 : parse_natural(idx, line, "section index");
      if (type == "set") {
        kind = Kind::set;
        sc.sets[family][index];
      } else if (type == "polys" || type == "units") {
        kind = type == "polys" ? Kind::polys : Kind::units;
        sc.words[family][index].units = kind == Kind::units;
      } else if (type == "ceer") {
        kind = Kind::ceer;
        ceer = &sc.ceers.insert_or_assign(family, CeerTable(kDefaultBound)).first->second;
        ceer_has_pairs = false;
      } else if (type == "phi") {
        kind = Kind::phi;
        index = parse_natural(family, line, "phi index");
        sc.phis[index];
      } else if (type == "functional") {
        kind = Kind::functional;
        index = parse_natural(family, line, "functional index");
        sc.functionals[index] = FunctionalStub(index, {});
      } else {
        throw ParseError(line, "unknown section type '" + type + "'");
      }
      if (family.empty() && kind != Kind::phi && kind != Kind::functional)
        throw ParseError(line, "section needs a name");
      continue;
    }
    switch (kind) {
      case Kind::top: {
        auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected key = value");
        std::string key = trim(body.substr(0, eq));
        if (!known_params().count(key)) throw ParseError(line, "unknown parameter '" + key + "'");
        sc.params[key] = {trim(body.substr(eq + 1)), 0, line};
        break;
      }
      case Kind::set: {
        auto& spec = sc.sets[family][index];
        if (body.rfind("stream", 0) == 0)
          spec.streams.push_back(parse_stream(body, line, false));
        else
          spec.entries.push_back(split_at(body, line));
        break;
      }
      case Kind::polys:
      case Kind::units: {
        auto& spec = sc.words[family][index];
        if (body.rfind("template=", 0) == 0 || body.rfind("monomials", 0) == 0) {
          if (kind == Kind::units && body.rfind("monomials", 0) == 0)
            throw ParseError(line, "monomial streams are only available for polynomial lists");
          spec.streams.push_back(parse_stream(body, line, true));
        } else {
          spec.entries.push_back(split_at(body, line));
        }
        break;
      }
      case Kind::ceer: {
        if (body.rfind("bound", 0) == 0) {
          if (ceer_has_pairs) throw ParseError(line, "bound must precede the pairs");
          auto eq = body.find('=');
          if (eq == std::string::npos) throw ParseError(line, "expected bound = n");
          *ceer = CeerTable(parse_natural(body.substr(eq + 1), line, "bound"));
          break;
        }
        Located l = split_at(body, line);
        std::istringstream ab(l.text);
        std::string a, b, extra;
        ab >> a >> b >> extra;
        if (b.empty() || !extra.empty()) throw ParseError(line, "expected 'a b @ stage'");
        try {
          ceer->add(parse_natural(a, line, "a"), parse_natural(b, line, "b"), l.stage);
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
        ceer_has_pairs = true;
        break;
      }
      case Kind::phi: {
        Located l = split_at(body, line);
        auto colon = l.text.find(':');
        if (colon == std::string::npos) throw ParseError(line, "expected 'arg : word @ stage'");
        std::string arg = trim(l.text.substr(0, colon));
        PhiStub::Value v;
        try {
          v.word = parse_word(l.text.substr(colon + 1));
        } catch (const ParseError& e) {
          throw ParseError(line, e.what());
        }
        v.stage = l.stage;
        if (arg == "*")
          sc.phis[index].wildcard = v;
        else
          sc.phis[index].values[parse_natural(arg, line, "phi argument")] = v;
        break;
      }
      case Kind::functional: {
        auto kv = key_values(body, line, body.rfind("halt", 0) == 0 ? 1 : 0);
        if (!kv.count("since") || !kv.count("use")) throw ParseError(line, "expected since=S use=U");
        auto halts = sc.functionals[index].halts();
        halts.push_back({parse_natural(kv["since"], line, "since"), parse_natural(kv["use"], line, "use")});
        sc.functionals[index] = FunctionalStub(index, halts);
        break;
      }
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read scenario " + path);
  auto slash = path.find_last_of('/');
  std::string name = path.substr(slash == std::string::npos ? 0 : slash + 1);
  return parse_scenario(in, name);
}

DarkRingParams dark_ring_params(const Scenario& s) {
  ParamReader r{s};
  DarkRingParams p;
  p.group = s.construction() == "dark-group";
  const char* pkey = s.params.count("modulus") ? "modulus" : "p";
  p.p = static_cast<std::uint32_t>(r.natural(pkey, 2));
  p.maxdeg = r.natural("maxdeg", p.maxdeg);
  p.stages = r.natural("stages", p.stages);
  p.unit_exponent = r.natural("unit-exponent", p.unit_exponent);
  if (const Located* e = r.find("epsilon")) {
    try {
      p.epsilon = parse_rational(e->text);
    } catch (const InvalidInput& err) {
      throw ParseError(e->line, err.what());
    }
    if (p.epsilon <= 0 || p.epsilon > 1)
      throw ParseError(e->line, "epsilon must lie in (0, 1], got " + e->text);
  }
  try {
    p.validate();
  } catch (const InvalidInput& err) {
    throw ParseError(r.line(pkey) ? r.line(pkey) : r.line("maxdeg"), err.what());
  }
  return p;
}

DarkRingInputs dark_ring_inputs(const Scenario& s, const DarkRingParams& p) {
  DarkRingInputs in;
  in.u_columns = staged_family(s, "U", p.stages);
  auto it = s.words.find("W");
  if (it == s.words.end()) return in;
  for (const auto& spec : dense(it->second)) {
    std::vector<TestWord> list;
    for (const auto& e : materialize(spec, p.stages)) {
      TestWord t{Poly(p.p), std::nullopt, e.stage};
      try {
        if (spec.units) {
          if (!p.group) throw ParseError(e.line, "unit words need the dark-group construction");
          t.unit = parse_unit_word(e.text);
        } else {
          t.poly = Poly::parse(e.text, p.p);
          if (t.poly.degree() > p.maxdeg)
            throw ParseError(e.line, "test word " + e.text + " exceeds maxdeg " + std::to_string(p.maxdeg));
        }
      } catch (const ParseError& err) {
        if (err.line()) throw;
        throw ParseError(e.line, err.what());
      }
      list.push_back(std::move(t));
    }
    in.w.push_back(std::move(list));
  }
  return in;
}

StarParams star_params(const Scenario& s) {
  ParamReader r{s};
  StarParams p;
  p.base = r.natural("base", p.base);
  p.levels = r.natural("levels", p.levels);
  p.stages = r.natural("stages", p.stages);
  p.x_bound = r.natural("x-bound", p.x_bound);
  try {
    p.validate();
  } catch (const InvalidInput& err) {
    throw ParseError(r.line("base") ? r.line("base") : r.line("levels"), err.what());
  }
  return p;
}

StarInputs star_inputs(const Scenario& s) {
  StarInputs in;
  auto it = s.ceers.find("U");
  in.u = it == s.ceers.end() ? CeerTable(16) : it->second;
  in.phis = dense(s.phis);
  return in;
}

Sigma3Params sigma3_params(const Scenario& s) {
  ParamReader r{s};
  Sigma3Params p;
  p.stages = r.natural("stages", p.stages);
  p.join_bound = r.natural("join-bound", p.join_bound);
  return p;
}

Sigma3Inputs sigma3_inputs(const Scenario& s) {
  Sigma3Inputs in;
  in.w_columns = staged_family(s, "W", stage_budget(s, 500));
  auto it = s.ceers.find("U");
  if (it != s.ceers.end()) in.u = it->second;
  for (const auto& [m, f] : s.functionals) {
    if (in.functionals.size() <= m) in.functionals.resize(m + 1);
    in.functionals[m] = f;
  }
  return in;
}

SugParams sug_params(const Scenario& s) {
  SugParams p;
  p.stages = stage_budget(s, p.stages);
  p.star = star_params(s);
  return p;
}

SugInputs sug_inputs(const Scenario& s) {
  SugInputs in;
  const Stage stages = stage_budget(s, 200);
  in.v_columns = staged_family(s, "V", stages);
  in.u_columns = staged_family(s, "U", stages);
  in.star = star_inputs(s);
  auto it = s.ceers.find("coded");
  if (it != s.ceers.end()) in.coded = it->second;
  for (const auto& [m, f] : s.functionals) {
    if (in.functionals.size() <= m) in.functionals.resize(m + 1);
    in.functionals[m] = f;
  }
  return in;
}

RunOutcome run_scenario(const Scenario& s) {
  const std::string c = s.construction();
  RunOutcome out;
  if (c == "dark-ring" || c == "dark-group") {
    auto p = dark_ring_params(s);
    auto in = dark_ring_inputs(s, p);
    DarkRingRun run = p.group ? run_dark_group(in, p) : run_dark_ring(in, p);
    out.summary = run.summary();
    out.log = std::move(run.log);
  } else if (c == "star-universal") {
    auto run = run_star_universal(star_inputs(s), star_params(s));
    out.summary = run.summary();
    out.log = run.log();
  } else if (c == "sigma3") {
    auto run = run_sigma3_ceer(sigma3_inputs(s), sigma3_params(s));
    out.summary = run.summary();
    out.log = std::move(run.log);
  } else if (c == "sug-indexset") {
    auto run = run_sug_indexset(sug_inputs(s), sug_params(s));
    out.summary = run.summary();
    out.log = std::move(run.log);
  } else {
    throw ParseError(s.params.at("construction").line, "unknown construction '" + c + "'");
  }
  out.log.header["scenario"] = s.name;
  return out;
}

}  // namespace ceerlab
