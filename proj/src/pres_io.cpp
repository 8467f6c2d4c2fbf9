#include "pres_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logjet {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// "2 mx + my" or "3*my" or "0" -> exponent vector over the generator names
IntVec parse_combination(const std::string& text,
                         const std::vector<std::string>& names, int line_no) {
  IntVec v(names.size(), Int(0));
  std::string t = trim(text);
  if (t == "0") return v;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t plus = t.find('+', pos);
    std::string term =
        trim(t.substr(pos, plus == std::string::npos ? std::string::npos
                                                     : plus - pos));
    if (term.empty()) throw ParseError("empty term in combination", line_no, 1);
    // optional coefficient, optional '*', then a generator name
    std::size_t i = 0;
    std::string digits;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
      digits += term[i++];
    while (i < term.size() &&
           (term[i] == '*' || std::isspace(static_cast<unsigned char>(term[i]))))
      ++i;
    std::string name = trim(term.substr(i));
    if (name.empty() && !digits.empty())
      throw ParseError("coefficient without generator", line_no, 1);
    long coeff = digits.empty() ? 1 : std::stol(digits);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ParseError("unknown log generator '" + name + "'", line_no, 1);
    v[static_cast<std::size_t>(it - names.begin())] += coeff;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return v;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile f;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_ring = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t sp = t.find_first_of(" \t");
    std::string key = sp == std::string::npos ? t : t.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(t.substr(sp + 1));

    if (key == "ring") {
      if (saw_ring) throw ParseError("duplicate ring line", line_no, 1);
      f.ring_vars = split_ws(rest);
      saw_ring = true;
    } else if (key == "char") {
      try {
        f.characteristic = static_cast<std::uint32_t>(std::stoul(rest));
      } catch (const std::exception&) {
        throw ParseError("bad characteristic '" + rest + "'", line_no, 1);
      }
    } else if (key == "order") {
      if (rest == "grevlex")
        f.order = OrderKind::grevlex;
      else if (rest == "lex")
        f.order = OrderKind::lex;
      else
        throw ParseError("unknown order '" + rest + "'", line_no, 1);
    } else if (key == "ideal") {
      if (rest.empty()) throw ParseError("empty ideal generator", line_no, 1);
      f.ideal_texts.push_back(rest);
    } else if (key == "log") {
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError("log line needs 'name : alpha'", line_no, 1);
      std::string name = trim(rest.substr(0, colon));
      std::string alpha = trim(rest.substr(colon + 1));
      if (name.empty() || alpha.empty())
        throw ParseError("log line needs 'name : alpha'", line_no, 1);
      f.log_gens.push_back({name, alpha});
    } else if (key == "logrel") {
      f.logrel_texts.push_back(rest);
    } else if (key == "logmode") {
      if (rest == "strict")
        f.embedded = false;
      else if (rest == "embedded")
        f.embedded = true;
      else
        throw ParseError("unknown logmode '" + rest + "'", line_no, 1);
    } else if (key == "base") {
      f.base_path = rest;
    } else if (key == "basemap" || key == "baselog") {
      std::size_t arrow = rest.find("->");
      if (arrow == std::string::npos)
        throw ParseError(key + " needs 'name -> image'", line_no, 1);
      std::string name = trim(rest.substr(0, arrow));
      std::string image = trim(rest.substr(arrow + 2));
      if (key == "basemap")
        f.basemap_texts.push_back({name, image});
      else
        f.baselog_texts.push_back({name, image});
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }
  if (!saw_ring) throw ParseError("missing ring line", 1, 1);
  f.make_ring_context();  // surfaces duplicate names and bad characteristics
  return f;
}

ContextPtr PresentationFile::make_ring_context() const {
  return make_context(ring_vars, order, characteristic);
}

std::string PresentationFile::print() const {
  std::string s = "ring";
  for (const auto& v : ring_vars) s += " " + v;
  s += "\n";
  s += "char " + std::to_string(characteristic) + "\n";
  s += std::string("order ") +
       (order == OrderKind::grevlex ? "grevlex" : "lex") + "\n";
  auto ctx = make_ring_context();
  for (const auto& g : ideal_texts)
    s += "ideal " + parse_polynomial(ctx, g).to_string() + "\n";
  for (const auto& [name, alpha] : log_gens)
    s += "log " + name + " : " + parse_polynomial(ctx, alpha).to_string() +
         "\n";
  std::vector<std::string> names;
  for (const auto& [name, alpha] : log_gens) names.push_back(name);
  for (std::size_t r = 0; r < logrel_texts.size(); ++r) {
    // normalize via the parsed exponent vectors
    std::size_t eq = logrel_texts[r].find('=');
    if (eq == std::string::npos)
      throw ParseError("logrel needs '='", static_cast<int>(r + 1), 1);
    IntVec l = parse_combination(logrel_texts[r].substr(0, eq), names, 0);
    IntVec rv = parse_combination(logrel_texts[r].substr(eq + 1), names, 0);
    auto side = [&](const IntVec& v) {
      std::string t;
      bool any = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (any) t += " + ";
        if (v[i] != 1) t += v[i].get_str() + " ";
        t += names[i];
        any = true;
      }
      return any ? t : std::string("0");
    };
    s += "logrel " + side(l) + " = " + side(rv) + "\n";
  }
  s += std::string("logmode ") + (embedded ? "embedded" : "strict") + "\n";
  if (base_path) {
    s += "base " + *base_path + "\n";
    for (const auto& [n, img] : basemap_texts)
      s += "basemap " + n + " -> " + img + "\n";
    for (const auto& [n, img] : baselog_texts)
      s += "baselog " + n + " -> " + img + "\n";
  }
  return s;
}

LogAlgebraPresentation PresentationFile::to_algebra(
    const FileReader& read_file) const {
  auto ctx = make_ring_context();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal_texts) gens.push_back(parse_polynomial(ctx, g));
  auto ring = make_ring(ctx, gens);

  PreLogStructure total;
  total.ring = ring;
  std::vector<std::string> names;
  for (const auto& [name, alpha] : log_gens) {
    names.push_back(name);
    total.alpha.push_back(parse_polynomial(ctx, alpha));
  }
  total.monoid = MonoidPresentation::free_monoid(names);
  for (const auto& rel : logrel_texts) {
    std::size_t eq = rel.find('=');
    if (eq == std::string::npos) throw ParseError("logrel needs '='", 1, 1);
    total.monoid.relations.push_back(
        {parse_combination(rel.substr(0, eq), names, 1),
         parse_combination(rel.substr(eq + 1), names, 1)});
  }

  if (!base_path) return LogAlgebraPresentation::over_scalars(std::move(total));

  if (!read_file)
    throw DomainError("presentation references a base file but no reader "
                      "was provided");
  PresentationFile base = parse_presentation(read_file(*base_path));
  if (base.characteristic != characteristic)
    throw DomainError("base characteristic differs from the total ring");
  auto bctx = base.make_ring_context();
  std::vector<Polynomial> bgens;
  for (const auto& g : base.ideal_texts)
    bgens.push_back(parse_polynomial(bctx, g));
  auto bring = make_ring(bctx, bgens);

  LogAlgebraPresentation alg;
  alg.total = std::move(total);
  alg.base.ring = bring;
  std::vector<std::string> bnames;
  for (const auto& [name, alpha] : base.log_gens) {
    bnames.push_back(name);
    alg.base.alpha.push_back(parse_polynomial(bctx, alpha));
  }
  alg.base.monoid = MonoidPresentation::free_monoid(bnames);

  alg.structure_map.source = bring;
  alg.structure_map.target = alg.total.ring;
  alg.structure_map.images.assign(bctx->nvars(), Polynomial(ctx));
  for (const auto& [name, img] : basemap_texts) {
    auto idx = bctx->index_of(name);
    if (!idx) throw DomainError("basemap names unknown base variable " + name);
    alg.structure_map.images[*idx] = parse_polynomial(ctx, img);
  }
  for (std::uint32_t v = 0; v < bctx->nvars(); ++v)
    if (alg.structure_map.images[v].is_zero() &&
        std::find_if(basemap_texts.begin(), basemap_texts.end(),
                     [&](const auto& p) { return p.first == bctx->name_of(v); }) ==
            basemap_texts.end())
      throw DomainError("basemap missing image for base variable " +
                        bctx->name_of(v));
  std::string witness;
  if (!alg.structure_map.well_defined(&witness))
    throw DomainError("base ideal does not map into the total ideal: " +
                      witness);

  alg.bind();
  alg.monoid_map.images.assign(alg.base.monoid.ngens(),
                               IntVec(alg.total.monoid.ngens(), Int(0)));
  for (const auto& [name, img] : baselog_texts) {
    auto it = std::find(bnames.begin(), bnames.end(), name);
    if (it == bnames.end())
      throw DomainError("baselog names unknown base log generator " + name);
    alg.monoid_map.images[static_cast<std::size_t>(it - bnames.begin())] =
        parse_combination(img, names, 1);
  }
  if (!alg.square_commutes(&witness))
    throw DomainError("base log structure does not commute with the ring "
                      "map at generator " + witness);
  return alg;
}

LogAlgebraPresentation load_algebra(const std::string& text,
                                    const FileReader& read_file) {
  return parse_presentation(text).to_algebra(read_file);
}

}  // namespace logjet
