#include "chemgenus/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "chemgenus/error.hpp"
#include "json.hpp"

namespace chemgenus {

namespace {

enum class Tok { Word, Number, Colon, Comma, Dash, Arrow, Plus, Question, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int column = 0;  // 1-based
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  return line;
}

// Tokens of one line. Digits followed directly by letters split into a
// number and a word, so "2Mg" reads as coefficient 2 and name Mg.
std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (word_start(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j]))
        ++j;
      out.push_back({Tok::Word, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < line.size() && digit(line[j]))
        ++j;
      // a label such as "1a" is not allowed; digits then letters is a coefficient
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else {
      Tok t;
      switch (c) {
        case ':': t = Tok::Colon; break;
        case ',': t = Tok::Comma; break;
        case '-': t = Tok::Dash; break;
        case '+': t = Tok::Plus; break;
        case '?': t = Tok::Question; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'", lineno, col);
      }
      out.push_back({t, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Word: return "name";
    case Tok::Number: return "number";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Dash: return "'-'";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Question: return "'?'";
    case Tok::End: return "end of line";
  }
  return "token";
}

class Cursor {
public:
  Cursor(std::vector<Token> toks, int lineno) : toks_(std::move(toks)), line_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok t) const { return peek().type == t; }
  bool done() const { return at(Tok::End); }
  int line() const { return line_; }

  const Token& expect(Tok t, std::string_view what = {}) {
    if (!at(t))
      error("expected " + std::string(what.empty() ? tok_name(t) : what) + ", found " +
            describe(peek()));
    return toks_[pos_++];
  }
  bool accept(Tok t) {
    if (!at(t))
      return false;
    ++pos_;
    return true;
  }
  Count expect_count(std::string_view what, Count max = kMaxCoefficient * 1000) {
    const Token& tok = expect(Tok::Number, what);
    Count value = 0;
    auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || value > max)
      throw SyntaxError(std::string(what) + " " + tok.text + " is too large", line_, tok.column);
    return value;
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw SyntaxError(msg, line_, peek().column);
  }
  static std::string describe(const Token& t) {
    if (t.type == Tok::End)
      return "end of line";
    return "'" + t.text + "'";
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    line = strip_comment(line);
    if (line.find_first_not_of(" \t") != std::string_view::npos)
      out.push_back({lineno, line});
    start = end + 1;
  }
  return out;
}

std::string keyword_of(const Line& line) {
  std::size_t b = line.text.find_first_not_of(" \t");
  std::size_t e = b;
  while (e < line.text.size() && word_char(line.text[e]))
    ++e;
  return std::string(line.text.substr(b, e - b));
}

const Element& element_at(const ElementTable& table, const Token& tok, int lineno) {
  if (const Element* e = table.find(tok.text))
    return *e;
  fail(ErrorKind::UnknownElement, "line " + std::to_string(lineno) + ", column " +
                                      std::to_string(tok.column) + ": unknown element symbol '" +
                                      tok.text + "'");
}

// Parses the block starting at lines[i]; advances i past it.
Molecule parse_block(const std::vector<Line>& lines, std::size_t& i, const ElementTable& table) {
  Cursor head(tokenize(lines[i].text, lines[i].number), lines[i].number);
  const Token& kw = head.expect(Tok::Word, "'molecule'");
  if (kw.text != "molecule")
    throw SyntaxError("expected 'molecule', found '" + kw.text + "'", head.line(), kw.column);
  Molecule m;
  m.name = head.expect(Tok::Word, "molecule name").text;
  head.expect(Tok::End);
  ++i;

  if (i >= lines.size())
    throw SyntaxError("molecule '" + m.name + "' needs an atoms or composition line",
                      lines[i - 1].number, 1);
  Cursor body(tokenize(lines[i].text, lines[i].number), lines[i].number);
  const Token& what = body.expect(Tok::Word, "'atoms' or 'composition'");

  if (what.text == "composition") {
    Composition comp;
    do {
      const Token& sym = body.expect(Tok::Word, "element symbol");
      const Element& e = element_at(table, sym, body.line());
      body.expect(Tok::Colon);
      Count n = body.expect_count("count");
      comp.counts.push_back({e, n});
    } while (!body.done());
    std::sort(comp.counts.begin(), comp.counts.end(),
              [](const ElementCount& a, const ElementCount& b) {
                return a.element.symbol < b.element.symbol;
              });
    m.body = std::move(comp);
    ++i;
    return m;
  }
  if (what.text != "atoms")
    throw SyntaxError("expected 'atoms' or 'composition', found '" + what.text + "'",
                      body.line(), what.column);

  Structure s;
  std::set<std::string> labels;
  do {
    const Token& label = body.expect(Tok::Word, "atom label");
    body.expect(Tok::Colon);
    const Token& sym = body.expect(Tok::Word, "element symbol");
    const Element& e = element_at(table, sym, body.line());
    if (!labels.insert(label.text).second)
      fail(ErrorKind::DuplicateAtomLabel, "line " + std::to_string(body.line()) + ", column " +
                                              std::to_string(label.column) + ": atom label '" +
                                              label.text + "' repeated");
    s.atoms.push_back({label.text, e});
  } while (!body.done());
  ++i;

  if (i < lines.size() && keyword_of(lines[i]) == "bonds") {
    Cursor bl(tokenize(lines[i].text, lines[i].number), lines[i].number);
    bl.expect(Tok::Word);
    do {
      Bond b;
      b.a = bl.expect(Tok::Word, "atom label").text;
      bl.expect(Tok::Dash);
      b.b = bl.expect(Tok::Word, "atom label").text;
      const Token& kind = bl.expect(Tok::Word, "'cov' or 'ion'");
      if (kind.text == "cov") {
        b.kind = Covalent{static_cast<int>(bl.expect_count("bond order", 1000))};
      } else if (kind.text == "ion") {
        b.kind = Ionic{static_cast<int>(bl.expect_count("transferred count", 1000)), b.a};
      } else {
        throw SyntaxError("expected 'cov' or 'ion', found '" + kind.text + "'", bl.line(),
                          kind.column);
      }
      s.bonds.push_back(std::move(b));
    } while (bl.accept(Tok::Comma));
    bl.expect(Tok::End, "',' or end of line");
    ++i;
  }
  m.body = std::move(s);
  return m;
}

Term parse_term(Cursor& c) {
  Term t;
  if (c.at(Tok::Number)) {
    t.coefficient = c.expect_count("coefficient", kMaxCoefficient);
    if (t.coefficient < 1)
      c.error("coefficient must be positive");
  }
  if (c.accept(Tok::Question))
    return t;
  t.name = c.expect(Tok::Word, "molecule name or '?'").text;
  return t;
}

Side parse_side(Cursor& c) {
  Side s;
  s.push_back(parse_term(c));
  while (c.accept(Tok::Plus))
    s.push_back(parse_term(c));
  return s;
}

Reaction parse_reaction_tokens(Cursor& c) {
  Reaction r;
  r.reactants = parse_side(c);
  c.expect(Tok::Arrow, "'+' or '->'");
  r.products = parse_side(c);
  c.expect(Tok::End, "'+' or end of line");
  if (r.unknown_count() > 1)
    fail(ErrorKind::MultipleUnknowns, "line " + std::to_string(c.line()) +
                                          ": '?' appears " +
                                          std::to_string(r.unknown_count()) + " times");
  return r;
}

Reaction parse_reaction_at(std::string_view text, int lineno) {
  Cursor c(tokenize(strip_comment(text), lineno), lineno);
  return parse_reaction_tokens(c);
}

void check_unique_names(const DocumentSet& d) {
  std::set<std::string> names;
  for (const Molecule& m : d.molecules)
    if (!names.insert(m.name).second)
      fail(ErrorKind::DuplicateMolecule, "molecule '" + m.name + "' is defined more than once");
}

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

Molecule parse_molecule_block(std::string_view text, const ElementTable& table) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty())
    throw SyntaxError("empty molecule block", 1, 1);
  std::size_t i = 0;
  Molecule m = parse_block(lines, i, table);
  if (i != lines.size())
    throw SyntaxError("unexpected content after molecule '" + m.name + "'", lines[i].number, 1);
  return m;
}

Reaction parse_reaction_line(std::string_view text) {
  if (text.find('\n') != std::string_view::npos)
    throw SyntaxError("a reaction must fit on one line", 1, static_cast<int>(text.find('\n')) + 1);
  return parse_reaction_at(text, 1);
}

Side parse_side_expr(std::string_view text) {
  Cursor c(tokenize(strip_comment(text), 1), 1);
  Side s = parse_side(c);
  c.expect(Tok::End, "'+' or end of input");
  return s;
}

ResponseCurve parse_curve(std::string_view text) {
  std::vector<Sample> samples;
  bool first = true;
  for (const Line& line : significant_lines(text)) {
    std::string_view row = line.text;
    std::size_t comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw SyntaxError("expected two comma-separated columns", line.number, 1);
    auto t = parse_double(row.substr(0, comma));
    auto v = parse_double(row.substr(comma + 1));
    if (!t || !v) {
      if (first && !t && !v) {  // header row
        first = false;
        continue;
      }
      throw SyntaxError("malformed number", line.number, t ? static_cast<int>(comma) + 2 : 1);
    }
    first = false;
    if (!samples.empty() && !(*t > samples.back().t))
      fail(ErrorKind::NonMonotoneTime, "line " + std::to_string(line.number) + ": t = " +
                                           std::string(row.substr(0, comma)) +
                                           " does not exceed the previous time");
    samples.push_back({*t, *v});
  }
  if (samples.size() < 2)
    throw SyntaxError("a response curve needs at least two samples", 0, 0);
  return ResponseCurve(std::move(samples));
}

DocumentSet parse_document(std::string_view text, const ElementTable& table) {
  DocumentSet doc;
  std::vector<Line> lines = significant_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    std::string kw = keyword_of(lines[i]);
    if (kw == "molecule") {
      doc.molecules.push_back(parse_block(lines, i, table));
    } else if (kw == "reaction") {
      std::string_view rest = lines[i].text;
      std::size_t at = rest.find("reaction") + 8;
      // keep column numbers relative to the full line
      std::string padded(at, ' ');
      padded += rest.substr(at);
      doc.reactions.push_back(parse_reaction_at(padded, lines[i].number));
      ++i;
    } else {
      std::size_t col = lines[i].text.find_first_not_of(" \t") + 1;
      throw SyntaxError("expected 'molecule' or 'reaction'", lines[i].number,
                        static_cast<int>(col));
    }
  }
  check_unique_names(doc);
  return doc;
}

DocumentSet parse_document_json(std::string_view text, const ElementTable& table) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), 0, 0);
  }
  DocumentSet doc;
  try {
    if (!root.is_object())
      throw SyntaxError("top level must be an object", 0, 0);
    for (const json& jm : root.value("molecules", json::array())) {
      Molecule m;
      m.name = jm.at("name").get<std::string>();
      if (jm.contains("composition")) {
        Composition comp;
        for (const auto& [sym, n] : jm.at("composition").items())
          comp.counts.push_back({table.lookup(sym), n.get<Count>()});
        m.body = std::move(comp);  // object keys arrive sorted
      } else {
        Structure s;
        std::set<std::string> labels;
        for (const json& ja : jm.at("atoms")) {
          Atom a{ja.at("label").get<std::string>(), table.lookup(ja.at("element").get<std::string>())};
          if (!labels.insert(a.label).second)
            fail(ErrorKind::DuplicateAtomLabel, "atom label '" + a.label + "' repeated in '" +
                                                    m.name + "'");
          s.atoms.push_back(std::move(a));
        }
        for (const json& jb : jm.value("bonds", json::array())) {
          Bond b;
          b.a = jb.at("a").get<std::string>();
          b.b = jb.at("b").get<std::string>();
          std::string kind = jb.at("kind").get<std::string>();
          if (kind == "cov")
            b.kind = Covalent{jb.at("order").get<int>()};
          else if (kind == "ion")
            b.kind = Ionic{jb.at("transferred").get<int>(), jb.value("donor", b.a)};
          else
            throw SyntaxError("bond kind must be \"cov\" or \"ion\"", 0, 0);
          s.bonds.push_back(std::move(b));
        }
        m.body = std::move(s);
      }
      doc.molecules.push_back(std::move(m));
    }
    int n = 0;
    for (const json& jr : root.value("reactions", json::array()))
      doc.reactions.push_back(parse_reaction_at(jr.get<std::string>(), ++n));
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed document: ") + e.what(), 0, 0);
  }
  check_unique_names(doc);
  return doc;
}

DocumentSet load_document(const std::filesystem::path& path, const ElementTable& table) {
  std::string text = read_file(path);
  if (path.extension() == ".json")
    return parse_document_json(text, table);
  return parse_document(text, table);
}

ResponseCurve load_curve(const std::filesystem::path& path) { return parse_curve(read_file(path)); }

std::string render_molecule(const Molecule& m) {
  std::ostringstream out;
  out << "molecule " << m.name << "\n";
  if (!m.is_structural()) {
    out << "composition";
    for (const ElementCount& ec : m.composition().counts)
      out << " " << ec.element.symbol << ":" << ec.count;
    out << "\n";
    return out.str();
  }
  const Structure& s = m.structure();
  out << "atoms";
  for (const Atom& a : s.atoms)
    out << " " << a.label << ":" << a.element.symbol;
  out << "\n";
  if (!s.bonds.empty()) {
    out << "bonds";
    for (std::size_t i = 0; i < s.bonds.size(); ++i) {
      const Bond& b = s.bonds[i];
      out << (i ? ", " : " ");
      if (auto* cov = std::get_if<Covalent>(&b.kind)) {
        out << b.a << "-" << b.b << " cov " << cov->order;
      } else {
        const Ionic& ion = std::get<Ionic>(b.kind);
        const std::string& other = ion.donor == b.a ? b.b : b.a;
        out << ion.donor << "-" << other << " ion " << ion.transferred;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_side(const Side& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out << " + ";
    if (s[i].coefficient != 1)
      out << s[i].coefficient << " ";
    out << (s[i].is_unknown() ? std::string("?") : *s[i].name);
  }
  return out.str();
}

std::string render_reaction(const Reaction& r) {
  return render_side(r.reactants) + " -> " + render_side(r.products);
}

std::string render_document(const DocumentSet& d) {
  std::ostringstream out;
  for (const Molecule& m : d.molecules)
    out << render_molecule(m) << "\n";
  for (const Reaction& r : d.reactions)
    out << "reaction " << render_reaction(r) << "\n";
  return out.str();
}

std::string render_document_json(const DocumentSet& d) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["molecules"] = ordered_json::array();
  for (const Molecule& m : d.molecules) {
    ordered_json jm;
    jm["name"] = m.name;
    if (!m.is_structural()) {
      ordered_json comp = ordered_json::object();
      for (const ElementCount& ec : m.composition().counts)
        comp[ec.element.symbol] = ec.count;
      jm["composition"] = comp;
    } else {
      jm["atoms"] = ordered_json::array();
      for (const Atom& a : m.structure().atoms)
        jm["atoms"].push_back({{"label", a.label}, {"element", a.element.symbol}});
      jm["bonds"] = ordered_json::array();
      for (const Bond& b : m.structure().bonds) {
        if (auto* cov = std::get_if<Covalent>(&b.kind)) {
          jm["bonds"].push_back({{"a", b.a}, {"b", b.b}, {"kind", "cov"}, {"order", cov->order}});
        } else {
          const Ionic& ion = std::get<Ionic>(b.kind);
          jm["bonds"].push_back({{"a", b.a}, {"b", b.b}, {"kind", "ion"},
                                 {"transferred", ion.transferred}, {"donor", ion.donor}});
        }
      }
    }
    root["molecules"].push_back(std::move(jm));
  }
  root["reactions"] = ordered_json::array();
  for (const Reaction& r : d.reactions)
    root["reactions"].push_back(render_reaction(r));
  return root.dump(2) + "\n";
}

std::string render_formula(const std::vector<ElementCount>& counts) {
  std::string out;
  for (const ElementCount& ec : counts) {
    out += ec.element.symbol;
    if (ec.count != 1)
      out += std::to_string(ec.count);
  }
  return out;
}

} // namespace chemgenus
