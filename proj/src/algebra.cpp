#include "tautilt/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

namespace {

std::vector<std::string> arrow_names(const std::vector<Arrow>& arrows, const Path& p) {
  std::vector<std::string> names;
  names.reserve(p.arrows.size());
  for (int a : p.arrows) names.push_back(arrows[static_cast<std::size_t>(a)].name);
  return names;
}

Path concatenate(const Path& a, const Path& b) {
  Path out{a.source, b.target, a.arrows};
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

void add_to(Element& target, const Element& source, const Rational& scale) {
  for (const auto& [index, coeff] : source) {
    Rational& slot = target[index];
    slot += scale * coeff;
    if (slot == 0) target.erase(index);
  }
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

BoundQuiver::BoundQuiver(int vertices, std::vector<Arrow> arrows, std::vector<Relation> relations,
                         AlgebraLimits limits)
    : vertices_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations)), limits_(limits) {
  if (vertices_ <= 0) throw InputError("an algebra needs at least one vertex");
  std::set<std::string> seen;
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertices_ || a.target < 0 || a.target >= vertices_)
      throw InputError("arrow " + a.name + " has an endpoint outside the vertex range");
    if (!seen.insert(a.name).second) throw InputError("duplicate arrow name " + a.name);
  }
  for (Relation& r : relations_) {
    if (r.terms.empty()) throw InputError("empty relation");
    // Merge repeated paths and drop zero coefficients.
    std::map<Path, Rational> merged;
    for (auto& [c, p] : r.terms) merged[p] += c;
    r.terms.clear();
    for (auto& [p, c] : merged)
      if (c != 0) r.terms.emplace_back(c, p);
    if (r.terms.empty()) throw InputError("relation cancels to zero");
    const Path& first = r.terms.front().second;
    for (const auto& [c, p] : r.terms) {
      if (p.source != first.source || p.target != first.target)
        throw InputError("relation joins non-parallel paths " + path_name(first) + " and " + path_name(p));
      if (p.length() < 2)
        throw InputError("relation term " + path_name(p) + " has length below two; the ideal would not be admissible");
    }
  }
  compute_basis(limits);
}

std::optional<int> BoundQuiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

void BoundQuiver::compute_basis(const AlgebraLimits& limits) {
  // Larger paths come first so that echelon pivots land on them and the
  // surviving (non-pivot) paths are the short, lexicographically small ones.
  auto larger = [this](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    const auto na = arrow_names(arrows_, a);
    const auto nb = arrow_names(arrows_, b);
    if (na != nb) return na > nb;
    return a.source > b.source;
  };

  for (std::size_t cap = 2;; ++cap) {
    if (cap > static_cast<std::size_t>(limits.max_path_length))
      throw InputError("path basis does not stabilise below length " + std::to_string(limits.max_path_length) +
                       "; the ideal is not admissible");
    std::vector<Path> paths;
    for (int v = 0; v < vertices_; ++v) paths.push_back(Path{v, v, {}});
    for (std::size_t start = 0; start < paths.size(); ++start) {
      if (paths[start].length() >= cap) continue;
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source != paths[start].target) continue;
        Path next = paths[start];
        next.arrows.push_back(static_cast<int>(a));
        next.target = arrows_[a].target;
        paths.push_back(std::move(next));
        if (paths.size() > limits.max_paths)
          throw InputError("more than " + std::to_string(limits.max_paths) + " paths below length " +
                           std::to_string(cap) + "; the ideal is not admissible within limits");
      }
    }
    std::sort(paths.begin(), paths.end(), larger);
    std::map<Path, linalg::Index> column;
    for (std::size_t i = 0; i < paths.size(); ++i) column[paths[i]] = static_cast<linalg::Index>(i);

    std::vector<Element> rows;
    for (const Relation& r : relations_) {
      const Path& shape = r.terms.front().second;
      std::size_t shortest = shape.length();
      for (const auto& [c, p] : r.terms) shortest = std::min(shortest, p.length());
      for (const Path& u : paths) {
        if (u.target != shape.source || u.length() + shortest > cap) continue;
        for (const Path& v : paths) {
          if (v.source != shape.target || u.length() + v.length() + shortest > cap) continue;
          Element row;
          for (const auto& [c, p] : r.terms) {
            const Path w = concatenate(concatenate(u, p), v);
            if (w.length() > cap) continue;
            add_to(row, Element{{static_cast<int>(column.at(w)), Rational(1)}}, c);
          }
          if (!row.empty()) rows.push_back(std::move(row));
        }
      }
    }
    Mat system = Mat::Zero(static_cast<linalg::Index>(rows.size()), static_cast<linalg::Index>(paths.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& [col, c] : rows[i]) system(static_cast<linalg::Index>(i), col) = c;
    const auto ech = linalg::echelon(system);
    std::vector<int> pivot_row(paths.size(), -1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      pivot_row[static_cast<std::size_t>(ech.pivots[r])] = static_cast<int>(r);

    bool stable = true;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].length() == cap && pivot_row[i] < 0) stable = false;
    if (!stable) continue;

    std::vector<Path> survivors;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (pivot_row[i] < 0) survivors.push_back(paths[i]);
    std::sort(survivors.begin(), survivors.end(), [this](const Path& a, const Path& b) {
      if (a.source != b.source) return a.source < b.source;
      if (a.length() != b.length()) return a.length() < b.length();
      return arrow_names(arrows_, a) < arrow_names(arrows_, b);
    });
    basis_ = survivors;
    std::map<Path, int> basis_index;
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index[basis_[i]] = static_cast<int>(i);

    normal_forms_.clear();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      Element nf;
      if (pivot_row[i] < 0) {
        nf[basis_index.at(paths[i])] = Rational(1);
      } else {
        const auto r = static_cast<linalg::Index>(pivot_row[i]);
        for (std::size_t j = 0; j < paths.size(); ++j) {
          if (pivot_row[j] >= 0) continue;
          const Rational& c = ech.reduced(r, static_cast<linalg::Index>(j));
          if (c != 0) nf[basis_index.at(paths[j])] = -c;
        }
      }
      normal_forms_[paths[i]] = std::move(nf);
    }
    truncation_ = cap;
    break;
  }

  loewy_bound_ = 0;
  for (const Path& p : basis_) loewy_bound_ = std::max(loewy_bound_, static_cast<int>(p.length()));
  trivial_index_.assign(static_cast<std::size_t>(vertices_), -1);
  arrow_index_.assign(arrows_.size(), -1);
  between_.assign(static_cast<std::size_t>(vertices_),
                  std::vector<std::vector<int>>(static_cast<std::size_t>(vertices_)));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Path& p = basis_[i];
    between_[static_cast<std::size_t>(p.source)][static_cast<std::size_t>(p.target)].push_back(static_cast<int>(i));
    if (p.length() == 0) trivial_index_[static_cast<std::size_t>(p.source)] = static_cast<int>(i);
    if (p.length() == 1) arrow_index_[static_cast<std::size_t>(p.arrows.front())] = static_cast<int>(i);
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrow_index_[a] < 0)
      throw InputError("arrow " + arrows_[a].name + " vanishes in the quotient; the ideal is not admissible");

  products_.assign(basis_.size(), std::vector<Element>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (basis_[i].target == basis_[j].source) products_[i][j] = reduce(concatenate(basis_[i], basis_[j]));
}

const std::vector<int>& BoundQuiver::basis_between(int from, int to) const {
  return between_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

Element BoundQuiver::reduce(const Path& path) const {
  if (path.length() >= truncation_) return {};
  return normal_forms_.at(path);
}

const Element& BoundQuiver::multiply(int left, int right) const {
  return products_[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)];
}

Element BoundQuiver::multiply(const Element& left, const Element& right) const {
  Element out;
  for (const auto& [i, a] : left)
    for (const auto& [j, b] : right) add_to(out, multiply(i, j), a * b);
  return out;
}

BoundQuiver BoundQuiver::opposite() const {
  std::vector<Arrow> reversed;
  for (const Arrow& a : arrows_) reversed.push_back(Arrow{a.name, a.target, a.source});
  std::vector<Relation> rels;
  for (const Relation& r : relations_) {
    Relation out;
    for (const auto& [c, p] : r.terms) {
      Path q{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
      out.terms.emplace_back(c, std::move(q));
    }
    rels.push_back(std::move(out));
  }
  return BoundQuiver(vertices_, std::move(reversed), std::move(rels), limits_);
}

std::string BoundQuiver::path_name(const Path& path) const {
  if (path.arrows.empty()) return "e" + std::to_string(path.source + 1);
  std::string out;
  for (int a : path.arrows) {
    if (!out.empty()) out += '*';
    out += arrows_[static_cast<std::size_t>(a)].name;
  }
  return out;
}

std::string BoundQuiver::to_text() const {
  std::ostringstream out;
  out << "vertices " << vertices_ << '\n';
  for (const Arrow& a : arrows_) out << "arrow " << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << '\n';
  for (const Relation& r : relations_) {
    out << "relation";
    bool first = true;
    for (const auto& [c, p] : r.terms) {
      if (!first) out << " +";
      out << ' ' << format_rational(c) << ' ' << path_name(p);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string BoundQuiver::fingerprint() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_text())));
  return buf;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool looks_numeric(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+') return false;
  return std::any_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_vertex(const std::string& token, int n, int line) {
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw ParseError("expected a vertex number, got '" + token + "'", line);
  }
  if (n > 0 && (v < 1 || v > n)) throw ParseError("vertex " + token + " outside 1.." + std::to_string(n), line);
  return v - 1;
}

}  // namespace

BoundQuiver parse_algebra(std::string_view text, AlgebraLimits limits) {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, std::vector<std::string>>> pending_relations;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];
    if (kw == "vertices") {
      if (tokens.size() != 2) throw ParseError("usage: vertices <n>", line_no);
      if (n != 0) throw ParseError("vertices declared twice", line_no);
      n = parse_vertex(tokens[1], 0, line_no) + 1;
      if (n <= 0) throw ParseError("vertex count must be positive", line_no);
    } else if (kw == "arrow") {
      if (n == 0) throw ParseError("arrow before vertices declaration", line_no);
      // Accept "arrow a: 1 -> 2" as well as "arrow a : 1->2".
      std::string rest;
      for (std::size_t i = 1; i < tokens.size(); ++i) rest += tokens[i] + ' ';
      const auto colon = rest.find(':');
      const auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw ParseError("usage: arrow <name>: <i> -> <j>", line_no);
      auto name_tokens = split_ws(rest.substr(0, colon));
      auto src_tokens = split_ws(rest.substr(colon + 1, arrow - colon - 1));
      auto tgt_tokens = split_ws(rest.substr(arrow + 2));
      if (name_tokens.size() != 1 || src_tokens.size() != 1 || tgt_tokens.size() != 1)
        throw ParseError("usage: arrow <name>: <i> -> <j>", line_no);
      const std::string& name = name_tokens[0];
      if (name.find('*') != std::string::npos || looks_numeric(name))
        throw ParseError("invalid arrow name '" + name + "'", line_no);
      arrows.push_back(Arrow{name, parse_vertex(src_tokens[0], n, line_no), parse_vertex(tgt_tokens[0], n, line_no)});
    } else if (kw == "relation") {
      if (tokens.size() < 2) throw ParseError("empty relation", line_no);
      pending_relations.emplace_back(line_no, std::vector<std::string>(tokens.begin() + 1, tokens.end()));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line_no);
    }
  }
  if (n == 0) throw ParseError("missing 'vertices' declaration", 0);

  auto find = [&arrows](const std::string& name) -> int {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
  };

  std::vector<Relation> relations;
  for (const auto& [line, tokens] : pending_relations) {
    Relation rel;
    Rational sign(1);
    std::optional<Rational> coeff;
    bool expect_term = true;
    for (const std::string& tok : tokens) {
      if (!expect_term) {
        if (tok != "+" && tok != "-") throw ParseError("expected '+' or '-' between terms, got '" + tok + "'", line);
        sign = tok == "-" ? Rational(-1) : Rational(1);
        expect_term = true;
        continue;
      }
      if (tok == "-" && !coeff) {
        sign = -sign;
        continue;
      }
      if (looks_numeric(tok)) {
        if (coeff) throw ParseError("two coefficients in a row", line);
        try {
          coeff = parse_rational(tok);
        } catch (const std::exception&) {
          throw ParseError("malformed coefficient '" + tok + "'", line);
        }
        continue;
      }
      Path path;
      std::string name;
      std::vector<std::string> parts;
      for (char c : tok) {
        if (c == '*') {
          parts.push_back(name);
          name.clear();
        } else {
          name += c;
        }
      }
      parts.push_back(name);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const int a = find(parts[i]);
        if (a < 0) throw ParseError("unknown arrow '" + parts[i] + "'", line);
        const Arrow& arr = arrows[static_cast<std::size_t>(a)];
        if (i == 0) {
          path.source = arr.source;
        } else if (arr.source != path.target) {
          throw ParseError("path " + tok + " is not composable at " + parts[i], line);
        }
        path.target = arr.target;
        path.arrows.push_back(a);
      }
      rel.terms.emplace_back(sign * coeff.value_or(Rational(1)), std::move(path));
      coeff.reset();
      sign = Rational(1);
      expect_term = false;
    }
    if (expect_term) throw ParseError("relation ends without a path", line);
    relations.push_back(std::move(rel));
  }
  try {
    return BoundQuiver(n, std::move(arrows), std::move(relations), limits);
  } catch (const InputError&) {
    throw;
  }
}

}  // namespace tautilt
