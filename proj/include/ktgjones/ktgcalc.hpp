#pragma once

// Knotted trivalent graph move programs.
//
// A program starts from the planar theta graph and applies framing changes
// (F+/F-), unzips (U) and triangle moves (A). Replaying it forward tracks the
// ribbon graph combinatorially: a cyclic order of half-edges at each vertex and
// the parity of half twists on each edge (which decides how an unzip rejoins
// the four adjacent edge-ends). Walking the moves backwards turns the program
// into a StateSumPlan.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ktgjones/errors.hpp"
#include "ktgjones/params.hpp"

namespace ktg {

// ---------------------------------------------------------------------------
// Graph

struct HalfEdge {
  std::string edge;
  int end = 0;  // 0 or 1

  HalfEdge opposite() const { return {edge, 1 - end}; }
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct KTGEdge {
  std::array<std::string, 2> ends;  // vertex ids; both empty for a closed circle
  bool twisted = false;             // odd number of half twists

  bool is_circle() const { return ends[0].empty(); }
  friend bool operator==(const KTGEdge&, const KTGEdge&) = default;
};

struct KTGVertex {
  std::array<HalfEdge, 3> rotation;  // counterclockwise order

  friend bool operator==(const KTGVertex&, const KTGVertex&) = default;
};

struct FrameRecord {
  std::string edge;
  long half_twists;  // signed
};

struct TriangleRecord {
  std::string vertex;
  std::array<std::string, 3> incident;  // sorted by half-edge identity
  std::array<std::string, 3> triangle;  // triangle[k] is opposite incident[k]
};

struct UnzipRecord {
  struct Part {
    std::string edge;                   // new edge
    std::vector<std::string> absorbed;  // old edges merged into it
  };
  std::string edge;
  std::vector<Part> parts;  // one or two
};

using MoveRecord = std::variant<FrameRecord, TriangleRecord, UnzipRecord>;

class KTGGraph {
 public:
  /// Two vertices v1, v2 joined by e1, e2, e3, drawn in the plane.
  static KTGGraph theta() {
    KTGGraph g;
    for (const char* e : {"e1", "e2", "e3"}) g.edges_[e] = KTGEdge{{"v1", "v2"}, false};
    g.vertices_["v1"] = KTGVertex{{HalfEdge{"e1", 0}, HalfEdge{"e2", 0}, HalfEdge{"e3", 0}}};
    g.vertices_["v2"] = KTGVertex{{HalfEdge{"e1", 1}, HalfEdge{"e3", 1}, HalfEdge{"e2", 1}}};
    return g;
  }

  const std::map<std::string, KTGVertex>& vertices() const { return vertices_; }
  const std::map<std::string, KTGEdge>& edges() const { return edges_; }
  bool has_edge(const std::string& e) const { return edges_.count(e) > 0; }
  bool has_vertex(const std::string& v) const { return vertices_.count(v) > 0; }

  bool is_single_circle() const {
    return vertices_.empty() && edges_.size() == 1 && edges_.begin()->second.is_circle();
  }

  std::string summary() const {
    return std::to_string(vertices_.size()) + " vertices, " + std::to_string(edges_.size()) + " edges";
  }

  FrameRecord frame(const std::string& e, long half_twists) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw UnknownTarget("edge '" + e + "'");
    if (half_twists % 2 != 0) it->second.twisted = !it->second.twisted;
    return {e, half_twists};
  }

  /// Replaces vertex x by a triangle. The vertex attached to the k-th incident
  /// half-edge (in identifier order) is x.k; edge x.tk is opposite it.
  TriangleRecord expand_vertex(const std::string& x) {
    auto vit = vertices_.find(x);
    if (vit == vertices_.end()) throw UnknownTarget("vertex '" + x + "'");
    const std::array<HalfEdge, 3> rot = vit->second.rotation;
    std::array<HalfEdge, 3> sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](const HalfEdge& h) {
      return static_cast<int>(std::find(sorted.begin(), sorted.end(), h) - sorted.begin()) + 1;
    };
    auto vname = [&](const HalfEdge& h) { return x + "." + std::to_string(index_of(h)); };
    // edge joining the vertices on rot[i] and rot[j] is named after the third one
    auto tname = [&](int i, int j) { return x + ".t" + std::to_string(index_of(rot[3 - i - j])); };

    for (int i = 0; i < 3; ++i) {
      if (vertices_.count(vname(rot[i])) || edges_.count(tname(i, (i + 1) % 3)))
        throw Error("ktgcalc", "name clash while expanding vertex '" + x + "'");
    }
    vertices_.erase(vit);
    for (int i = 0; i < 3; ++i) {
      const int nx = (i + 1) % 3;
      edges_[tname(i, nx)] = KTGEdge{{vname(rot[i]), vname(rot[nx])}, false};
    }
    for (int i = 0; i < 3; ++i) {
      const int nx = (i + 1) % 3, pv = (i + 2) % 3;
      edges_.at(rot[i].edge).ends[rot[i].end] = vname(rot[i]);
      vertices_[vname(rot[i])] = KTGVertex{{rot[i], HalfEdge{tname(i, nx), 0}, HalfEdge{tname(pv, i), 1}}};
    }
    TriangleRecord rec;
    rec.vertex = x;
    for (int k = 0; k < 3; ++k) {
      rec.incident[k] = sorted[k].edge;
      rec.triangle[k] = x + ".t" + std::to_string(k + 1);
    }
    return rec;
  }

  /// Doubles edge e along its framing, deletes its end vertices and rejoins
  /// the four loose edge-ends pairwise into e.L and e.R.
  UnzipRecord unzip(const std::string& e) {
    auto eit = edges_.find(e);
    if (eit == edges_.end()) throw UnknownTarget("edge '" + e + "'");
    const KTGEdge edge = eit->second;
    if (edge.is_circle()) throw DegreeViolation("edge '" + e + "' has no trivalent end vertices");
    if (edge.ends[0] == edge.ends[1]) throw UnzipOnLoop("'" + e + "'");

    auto others = [&](const std::string& v, int end) {
      const auto& rot = vertices_.at(v).rotation;
      int i = static_cast<int>(std::find(rot.begin(), rot.end(), HalfEdge{e, end}) - rot.begin());
      return std::pair{rot[(i + 1) % 3], rot[(i + 2) % 3]};
    };
    auto [p, q] = others(edge.ends[0], 0);
    auto [r, s] = others(edge.ends[1], 1);

    std::map<HalfEdge, HalfEdge> strand;
    auto link = [&](const HalfEdge& a, const HalfEdge& b) {
      strand[a] = b;
      strand[b] = a;
    };
    if (edge.twisted) {
      link(p, r);
      link(q, s);
    } else {
      link(p, s);
      link(q, r);
    }

    vertices_.erase(edge.ends[0]);
    vertices_.erase(edge.ends[1]);
    edges_.erase(eit);

    UnzipRecord rec;
    rec.edge = e;
    std::set<HalfEdge> used;
    const std::array<std::pair<HalfEdge, std::string>, 2> starts{{{p, e + ".L"}, {q, e + ".R"}}};
    for (const auto& [start, name] : starts) {
      if (used.count(start)) continue;
      if (edges_.count(name)) throw Error("ktgcalc", "name clash while unzipping '" + e + "'");
      std::vector<std::string> chain{start.edge};
      int strands = 0;
      bool cycle = false;

      HalfEdge cur = start, fwd_end;
      while (true) {
        used.insert(cur);
        const HalfEdge across = strand.at(cur);
        used.insert(across);
        ++strands;
        const HalfEdge other = across.opposite();
        if (other == start) {
          cycle = true;
          break;
        }
        chain.push_back(across.edge);
        if (strand.count(other)) {
          cur = other;
          continue;
        }
        fwd_end = other;
        break;
      }

      HalfEdge back_end = start.opposite();
      if (!cycle) {
        while (strand.count(back_end)) {
          used.insert(back_end);
          const HalfEdge across = strand.at(back_end);
          used.insert(across);
          ++strands;
          chain.push_back(across.edge);
          back_end = across.opposite();
        }
      }

      std::sort(chain.begin(), chain.end());
      chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
      bool parity = edge.twisted && (strands % 2 == 1);
      for (const auto& c : chain) parity ^= edges_.at(c).twisted;

      KTGEdge merged;
      merged.twisted = parity;
      if (!cycle) {
        merged.ends = {edges_.at(back_end.edge).ends[back_end.end], edges_.at(fwd_end.edge).ends[fwd_end.end]};
        replace_half_edge(merged.ends[0], back_end, HalfEdge{name, 0});
        replace_half_edge(merged.ends[1], fwd_end, HalfEdge{name, 1});
      }
      for (const auto& c : chain) edges_.erase(c);
      edges_[name] = merged;
      rec.parts.push_back({name, chain});
    }
    return rec;
  }

  friend bool operator==(const KTGGraph&, const KTGGraph&) = default;

 private:
  void replace_half_edge(const std::string& v, const HalfEdge& from, const HalfEdge& to) {
    for (auto& h : vertices_.at(v).rotation) {
      if (h == from) {
        h = to;
        return;
      }
    }
    throw Error("ktgcalc", "corrupt rotation at vertex '" + v + "'");
  }

  std::map<std::string, KTGVertex> vertices_;
  std::map<std::string, KTGEdge> edges_;
};

// ---------------------------------------------------------------------------
// Programs

enum class MoveKind { FramePlus, FrameMinus, Unzip, Triangle };

struct Move {
  MoveKind kind;
  std::string target;
  long count = 1;  // repetitions, for F+ e^k / F- e^k
  int line = 0;
  int column = 0;

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind == b.kind && a.target == b.target && a.count == b.count;
  }
};

struct MoveProgram {
  std::vector<Move> moves;

  friend bool operator==(const MoveProgram&, const MoveProgram&) = default;
};

inline std::string to_text(const MoveProgram& program) {
  std::ostringstream os;
  os << "theta;\n";
  for (const auto& m : program.moves) {
    switch (m.kind) {
      case MoveKind::Triangle: os << "A " << m.target; break;
      case MoveKind::Unzip: os << "U " << m.target; break;
      case MoveKind::FramePlus: os << "F+ " << m.target; break;
      case MoveKind::FrameMinus: os << "F- " << m.target; break;
    }
    if ((m.kind == MoveKind::FramePlus || m.kind == MoveKind::FrameMinus) && m.count != 1) os << "^" << m.count;
    os << ";\n";
  }
  return os.str();
}

struct ReplayTrace {
  std::vector<KTGGraph> graphs;  // graphs[0] is the theta graph, graphs[i] follows move i-1
  std::vector<MoveRecord> records;
};

inline MoveRecord apply_move(KTGGraph& g, const Move& m) {
  auto where = [&] { return m.line > 0 ? " (line " + std::to_string(m.line) + ")" : std::string(); };
  try {
    switch (m.kind) {
      case MoveKind::FramePlus: return g.frame(m.target, m.count);
      case MoveKind::FrameMinus: return g.frame(m.target, -m.count);
      case MoveKind::Triangle: return g.expand_vertex(m.target);
      case MoveKind::Unzip: return g.unzip(m.target);
    }
  } catch (const UnknownTarget&) {
    throw UnknownTarget("'" + m.target + "'" + where());
  } catch (const DegreeViolation&) {
    throw DegreeViolation("U '" + m.target + "' on an edge without end vertices" + where());
  } catch (const UnzipOnLoop&) {
    throw UnzipOnLoop("'" + m.target + "'" + where());
  }
  throw Error("ktgcalc", "unknown move kind");
}

inline ReplayTrace replay_trace(const MoveProgram& program) {
  ReplayTrace trace;
  KTGGraph g = KTGGraph::theta();
  trace.graphs.push_back(g);
  for (const auto& m : program.moves) {
    trace.records.push_back(apply_move(g, m));
    trace.graphs.push_back(g);
  }
  return trace;
}

/// Graph after each move, starting with the theta graph itself.
inline std::vector<KTGGraph> replay(const MoveProgram& program) { return replay_trace(program).graphs; }

namespace detail {

class ProgramLexer {
 public:
  explicit ProgramLexer(std::string_view text) : text_(text) {}

  struct Token {
    std::string text;
    int line;
    int column;
  };

  std::optional<Token> next() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    Token tok{"", line_, col_};
    char c = text_[pos_];
    if (c == ';' || c == '^') {
      tok.text = std::string(1, c);
      advance();
      return tok;
    }
    if (!is_ident(c)) throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    while (pos_ < text_.size() && is_ident(text_[pos_])) {
      tok.text += text_[pos_];
      advance();
    }
    if (tok.text == "F" && pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      tok.text += text_[pos_];
      advance();
    }
    return tok;
  }

 private:
  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

/// Parses and validates a program:
///   program := "theta" ";" { move ";" }
///   move    := "A" vertex | "U" edge | ("F+" | "F-") edge [ "^" int ]
/// '#' starts a comment. Validation replays the program forward.
inline MoveProgram parse_program(std::string_view text) {
  detail::ProgramLexer lex(text);
  MoveProgram program;
  auto expect_semicolon = [&](int line, int col) {
    auto t = lex.next();
    if (!t) throw SyntaxError(line, col, "expected ';' at end of input");
    if (t->text != ";") throw SyntaxError(t->line, t->column, "expected ';', found '" + t->text + "'");
  };
  auto is_name = [](const std::string& s) { return !s.empty() && s != ";" && s != "^"; };

  auto head = lex.next();
  if (!head) throw SyntaxError(1, 1, "empty program, expected 'theta'");
  if (head->text != "theta") throw SyntaxError(head->line, head->column, "program must start with 'theta'");
  expect_semicolon(head->line, head->column);

  while (auto tok = lex.next()) {
    Move m{};
    m.line = tok->line;
    m.column = tok->column;
    if (tok->text == "A")
      m.kind = MoveKind::Triangle;
    else if (tok->text == "U")
      m.kind = MoveKind::Unzip;
    else if (tok->text == "F+")
      m.kind = MoveKind::FramePlus;
    else if (tok->text == "F-")
      m.kind = MoveKind::FrameMinus;
    else
      throw SyntaxError(tok->line, tok->column, "unknown move '" + tok->text + "'");

    auto target = lex.next();
    if (!target || !is_name(target->text))
      throw SyntaxError(target ? target->line : tok->line, target ? target->column : tok->column,
                        "expected a target identifier");
    m.target = target->text;

    auto after = lex.next();
    if (after && after->text == "^") {
      if (m.kind != MoveKind::FramePlus && m.kind != MoveKind::FrameMinus)
        throw SyntaxError(after->line, after->column, "'^' is only allowed on framing moves");
      auto num = lex.next();
      if (!num || num->text.empty() ||
          !std::all_of(num->text.begin(), num->text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw SyntaxError(num ? num->line : after->line, num ? num->column : after->column,
                          "expected a positive repetition count after '^'");
      m.count = std::stol(num->text);
      if (m.count <= 0) throw SyntaxError(num->line, num->column, "repetition count must be positive");
      after = lex.next();
    }
    if (!after) throw SyntaxError(tok->line, tok->column, "expected ';' at end of input");
    if (after->text != ";") throw SyntaxError(after->line, after->column, "expected ';', found '" + after->text + "'");
    program.moves.push_back(std::move(m));
  }
  replay_trace(program);
  return program;
}

// ---------------------------------------------------------------------------
// Symbolic colorings and plans

/// constant + n_coeff*n + sum coeff*var.
struct ColorExpr {
  long constant = 0;
  long n_coeff = 0;
  std::map<int, long> vars;

  static ColorExpr n() { return {0, 1, {}}; }
  static ColorExpr var(int index) { return {0, 0, {{index, 1}}}; }
  static ColorExpr literal(long c) { return {c, 0, {}}; }

  bool depends_on_sumvars() const { return !vars.empty(); }
  int max_var() const { return vars.empty() ? -1 : vars.rbegin()->first; }

  long eval(long n_value, std::span<const long> values) const {
    long v = constant + n_coeff * n_value;
    for (const auto& [i, c] : vars) v += c * values[static_cast<std::size_t>(i)];
    return v;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    auto add = [&](long c, const std::string& sym) {
      if (c == 0) return;
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      long a = c < 0 ? -c : c;
      if (sym.empty())
        out += std::to_string(a);
      else
        out += (a == 1 ? "" : std::to_string(a)) + sym;
    };
    add(n_coeff, "n");
    for (const auto& [i, c] : vars) add(c, names.at(static_cast<std::size_t>(i)));
    add(constant, "");
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const ColorExpr&, const ColorExpr&) = default;
  friend auto operator<=>(const ColorExpr&, const ColorExpr&) = default;
};

/// Summation variable for the color of an unzipped edge, ranging over
/// |left - right| .. left + right in steps of 2.
struct SumVar {
  std::string name;
  ColorExpr left;
  ColorExpr right;
};

enum class BlockKind { Twist, Loop, Theta, ThetaInverse, Delta };

struct PlanFactor {
  BlockKind kind;
  long exponent = 1;  // used by Twist; 1 otherwise
  std::vector<ColorExpr> args;
};

struct StateSumPlan {
  std::vector<SumVar> sumvars;
  std::vector<PlanFactor> factors;
  std::vector<PlanFactor> prefactor;  // monomial factors independent of the sumvars

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : sumvars) out.push_back(v.name);
    return out;
  }
};

inline std::string describe(const PlanFactor& f, const std::vector<std::string>& names) {
  std::string args;
  for (const auto& a : f.args) args += (args.empty() ? "" : ", ") + a.to_string(names);
  switch (f.kind) {
    case BlockKind::Twist: return "f(" + args + ")^" + std::to_string(f.exponent);
    case BlockKind::Loop: return "O(" + args + ")";
    case BlockKind::Theta: return "theta(" + args + ")";
    case BlockKind::ThetaInverse: return "theta(" + args + ")^-1";
    case BlockKind::Delta: return "Delta(" + args + ")";
  }
  return "?";
}

/// Human-readable plan listing (sumvars, prefactor, factors in evaluation order).
inline std::string dump_plan(const StateSumPlan& plan) {
  const auto names = plan.names();
  std::ostringstream os;
  os << "sumvars: " << plan.sumvars.size() << "\n";
  for (const auto& v : plan.sumvars) {
    os << "  " << v.name << " in |" << v.left.to_string(names) << " - " << v.right.to_string(names) << "| .. "
       << v.left.to_string(names) << " + " << v.right.to_string(names) << " step 2\n";
  }
  os << "prefactor: " << plan.prefactor.size() << "\n";
  for (const auto& f : plan.prefactor) os << "  " << describe(f, names) << "\n";
  os << "factors: " << plan.factors.size() << "\n";
  for (const auto& f : plan.factors) os << "  " << describe(f, names) << "\n";
  return os.str();
}

namespace detail {

// Folds twist factors with equal arguments and hoists the sumvar-free ones.
inline void normalize_twists(StateSumPlan& plan) {
  std::vector<PlanFactor> out;
  std::map<ColorExpr, std::size_t> twist_at;
  for (auto& f : plan.factors) {
    if (f.kind != BlockKind::Twist) {
      out.push_back(std::move(f));
      continue;
    }
    auto [it, fresh] = twist_at.try_emplace(f.args.at(0), out.size());
    if (fresh)
      out.push_back(std::move(f));
    else
      out[it->second].exponent += f.exponent;
  }
  plan.factors.clear();
  for (auto& f : out) {
    if (f.kind == BlockKind::Twist && f.exponent == 0) continue;
    if (f.kind == BlockKind::Twist && !f.args[0].depends_on_sumvars())
      plan.prefactor.push_back(std::move(f));
    else
      plan.factors.push_back(std::move(f));
  }
}

}  // namespace detail

/// Walks the moves last-to-first. `final_colors` must color every edge of the
/// program's final graph.
inline StateSumPlan reverse_compile(const MoveProgram& program, const std::map<std::string, ColorExpr>& final_colors) {
  ReplayTrace trace = replay_trace(program);
  const KTGGraph& final_graph = trace.graphs.back();
  std::map<std::string, ColorExpr> color;
  for (const auto& [id, e] : final_graph.edges()) {
    auto it = final_colors.find(id);
    if (it == final_colors.end()) throw InconsistentColors("no color given for final edge '" + id + "'");
    color[id] = it->second;
  }
  auto take = [&](const std::string& e) -> const ColorExpr& {
    auto it = color.find(e);
    if (it == color.end()) throw InconsistentColors("edge '" + e + "' has no color");
    return it->second;
  };

  StateSumPlan plan;
  for (auto rit = trace.records.rbegin(); rit != trace.records.rend(); ++rit) {
    if (const auto* fr = std::get_if<FrameRecord>(&*rit)) {
      plan.factors.push_back({BlockKind::Twist, fr->half_twists, {take(fr->edge)}});
    } else if (const auto* tr = std::get_if<TriangleRecord>(&*rit)) {
      PlanFactor d{BlockKind::Delta, 1, {}};
      for (const auto& e : tr->incident) d.args.push_back(take(e));
      for (const auto& e : tr->triangle) d.args.push_back(take(e));
      for (const auto& e : tr->triangle) color.erase(e);
      plan.factors.push_back(std::move(d));
    } else {
      const auto& ur = std::get<UnzipRecord>(*rit);
      std::vector<ColorExpr> side;
      for (const auto& part : ur.parts) {
        ColorExpr c = take(part.edge);
        color.erase(part.edge);
        for (const auto& old : part.absorbed) {
          auto [it, fresh] = color.try_emplace(old, c);
          if (!fresh && it->second != c) throw InconsistentColors("edge '" + old + "' receives two colors");
        }
        side.push_back(c);
      }
      if (side.size() == 1) side.push_back(side[0]);
      const int index = static_cast<int>(plan.sumvars.size());
      plan.sumvars.push_back({ur.edge, side[0], side[1]});
      color[ur.edge] = ColorExpr::var(index);
      plan.factors.push_back({BlockKind::Loop, 1, {ColorExpr::var(index)}});
      plan.factors.push_back({BlockKind::ThetaInverse, 1, {ColorExpr::var(index), side[0], side[1]}});
    }
  }
  plan.factors.push_back({BlockKind::Theta, 1, {take("e1"), take("e2"), take("e3")}});
  detail::normalize_twists(plan);
  return plan;
}

/// Knot version: the final graph must be a single circle, colored n.
inline StateSumPlan reverse_compile(const MoveProgram& program) {
  ReplayTrace trace = replay_trace(program);
  const KTGGraph& g = trace.graphs.back();
  if (!g.is_single_circle()) throw NotAKnot(g.summary());
  return reverse_compile(program, {{g.edges().begin()->first, ColorExpr::n()}});
}

// ---------------------------------------------------------------------------
// The Montesinos family

/// Edge on which the curls making the diagram 0-framed are placed.
inline constexpr const char* kCurlEdge = "v2.t1";

/// Generates C(r,s,t,u) from the theta graph: triangle moves on v1, v2 and on
/// the v1-triangle vertex at e2; half twists on the four twist edges e1, e2,
/// e3 and v1.2.t1 (r, s, t and -u of them); on each twist region's neighbour
/// the 2k opposite half twists that turn the ribbon framing of the unzipped
/// pair into blackboard framing; Wr negative curls on v2.t1; four unzips.
inline MoveProgram montesinos_program(const KnotParams& k, bool force = false) {
  validate(k, force);
  MoveProgram p;
  auto add = [&](MoveKind kind, std::string target, long count = 1) {
    p.moves.push_back(Move{kind, std::move(target), count, 0, 0});
  };
  auto twist = [&](const std::string& e, long half_twists) {
    if (half_twists > 0) add(MoveKind::FramePlus, e, half_twists);
    if (half_twists < 0) add(MoveKind::FrameMinus, e, -half_twists);
  };
  add(MoveKind::Triangle, "v1");
  add(MoveKind::Triangle, "v2");
  add(MoveKind::Triangle, "v1.2");

  const std::array<std::pair<const char*, long>, 4> regions{
      {{"e1", k.r}, {"e2", k.s}, {"e3", k.t}, {"v1.2.t1", -k.u}}};
  const std::array<const char*, 4> neighbours{"v1.t3", "v1.2.t3", "v1.t2", "v1.t1"};
  for (const auto& [e, tw] : regions) twist(e, tw);
  for (std::size_t i = 0; i < regions.size(); ++i) twist(neighbours[i], -2 * regions[i].second);
  twist(kCurlEdge, -2 * k.writhe());
  for (const auto& [e, tw] : regions) add(MoveKind::Unzip, e);
  return p;
}

}  // namespace ktg
