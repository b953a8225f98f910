#include "codegree/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace codegree {

using nlohmann::json;

TableError::TableError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

namespace {

// nlohmann reports a byte offset; translate it to line/column.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw TableError("unknown key '" + key + "' in " + where);
}

template <class T>
T get_as(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw TableError("missing key '" + std::string(key) + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw TableError("key '" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

std::uint64_t positive(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.contains(key) ? obj.at(key) : json();
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw TableError("key '" + std::string(key) + "' in " + where + " must be a positive integer");
  return v.get<std::uint64_t>();
}

void validate(const CharacterTable& t) {
  const std::size_t classes = t.class_sizes.size();
  if (classes == 0) throw TableError("invariant violated: class_sizes is empty");
  if (t.class_sizes[0] != 1) throw TableError("invariant violated: class_sizes[0] must be 1 (identity class)");
  const std::uint64_t total = std::accumulate(t.class_sizes.begin(), t.class_sizes.end(), std::uint64_t{0});
  if (total != t.order)
    throw TableError("invariant violated: class sizes sum to " + std::to_string(total) + ", order is " +
                     std::to_string(t.order));
  if (t.characters.size() != classes)
    throw TableError("invariant violated: " + std::to_string(t.characters.size()) + " characters for " +
                     std::to_string(classes) + " classes");
  std::set<std::string> labels;
  std::uint64_t sum_squares = 0;
  std::size_t principal = 0;
  for (const auto& c : t.characters) {
    if (!labels.insert(c.label).second) throw TableError("duplicate character label '" + c.label + "'");
    if (!c.values && !c.kernel_classes)
      throw TableError("invariant violated: character '" + c.label + "' needs values or kernel_classes");
    if (c.values) {
      if (c.values->size() != classes)
        throw TableError("character '" + c.label + "' has " + std::to_string(c.values->size()) + " values for " +
                         std::to_string(classes) + " classes");
      if ((*c.values)[0] != static_cast<std::int64_t>(c.degree))
        throw TableError("invariant violated: character '" + c.label + "' value at class 0 differs from degree");
      if (c.degree == 1 && std::all_of(c.values->begin(), c.values->end(), [](auto v) { return v == 1; }))
        ++principal;
    } else if (c.degree == 1 && c.kernel_classes->size() == classes) {
      ++principal;
    }
    if (c.kernel_classes) {
      const auto& k = *c.kernel_classes;
      if (std::find(k.begin(), k.end(), 0) == k.end())
        throw TableError("invariant violated: kernel_classes of '" + c.label + "' must contain class 0");
      for (auto i : k)
        if (i >= classes) throw TableError("kernel class index out of range in '" + c.label + "'");
    }
    sum_squares += c.degree * c.degree;
  }
  if (principal != 1)
    throw TableError("invariant violated: expected exactly one principal character, found " + std::to_string(principal));
  if (sum_squares != t.order)
    throw TableError("invariant violated: sum of squared degrees is " + std::to_string(sum_squares) + ", order is " +
                     std::to_string(t.order));
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(BigInt(static_cast<unsigned long>(n))).is_prime_power(); }

bool subset(const ClassSet& a, const ClassSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

CharacterTable parse_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw TableError(std::string("syntax error: ") + e.what(), line, col);
  }
  if (!doc.is_object()) throw TableError("top level must be an object");
  only_keys(doc, {"name", "order", "class_sizes", "characters", "solvable"}, "table");

  CharacterTable t;
  t.name = get_as<std::string>(doc, "name", "table");
  t.order = positive(doc, "order", "table");
  if (!doc.contains("class_sizes") || !doc["class_sizes"].is_array()) throw TableError("class_sizes must be an array");
  for (const auto& v : doc["class_sizes"]) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) throw TableError("class sizes must be positive integers");
    t.class_sizes.push_back(v.get<std::uint64_t>());
  }
  if (doc.contains("solvable")) {
    if (!doc["solvable"].is_boolean()) throw TableError("'solvable' must be a boolean");
    t.solvable_flag = doc["solvable"].get<bool>();
  }
  if (!doc.contains("characters") || !doc["characters"].is_array()) throw TableError("characters must be an array");
  std::size_t index = 0;
  for (const auto& c : doc["characters"]) {
    const std::string where = "character #" + std::to_string(index++);
    if (!c.is_object()) throw TableError(where + " must be an object");
    only_keys(c, {"label", "degree", "values", "kernel_classes"}, where);
    CharacterData d;
    d.label = get_as<std::string>(c, "label", where);
    d.degree = positive(c, "degree", where);
    if (c.contains("values")) {
      if (!c["values"].is_array()) throw TableError("values of " + where + " must be an array");
      std::vector<std::int64_t> vals;
      for (const auto& v : c["values"]) {
        if (!v.is_number_integer()) throw TableError("values of " + where + " must be integers");
        vals.push_back(v.get<std::int64_t>());
      }
      d.values = std::move(vals);
    }
    if (c.contains("kernel_classes")) {
      d.kernel_classes = get_as<std::vector<std::size_t>>(c, "kernel_classes", where);
      std::sort(d.kernel_classes->begin(), d.kernel_classes->end());
      if (std::adjacent_find(d.kernel_classes->begin(), d.kernel_classes->end()) != d.kernel_classes->end())
        throw TableError("repeated kernel class in " + where);
    }
    t.characters.push_back(std::move(d));
  }
  validate(t);
  return t;
}

CharacterTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

ClassSet kernel_classes(const CharacterData& c, const CharacterTable& t) {
  (void)t;
  if (c.values) {
    ClassSet out;
    for (std::size_t i = 0; i < c.values->size(); ++i)
      if ((*c.values)[i] == static_cast<std::int64_t>(c.degree)) out.push_back(i);
    return out;
  }
  return *c.kernel_classes;
}

std::uint64_t kernel_order(const ClassSet& ks, const CharacterTable& t) {
  if (std::find(ks.begin(), ks.end(), 0) == ks.end()) throw TableError("kernel must contain the identity class");
  std::uint64_t sum = 0;
  for (auto i : ks) sum += t.class_sizes.at(i);
  if (t.order % sum != 0)
    throw TableError("inconsistent table: kernel of order " + std::to_string(sum) + " does not divide " +
                     std::to_string(t.order));
  return sum;
}

std::vector<SpectrumEntry> codegree_spectrum(const CharacterTable& t) {
  std::vector<SpectrumEntry> out;
  for (const auto& c : t.characters) {
    const std::uint64_t ko = kernel_order(kernel_classes(c, t), t);
    const std::uint64_t index = t.order / ko;
    if (index % c.degree != 0)
      throw TableError("inconsistent table: codegree of '" + c.label + "' is not an integer");
    out.push_back({c.label, c.degree, ko, BigInt(static_cast<unsigned long>(index / c.degree))});
  }
  return out;
}

std::vector<NormalSubgroup> normal_subgroups(const CharacterTable& t) {
  std::set<ClassSet> sets;
  for (const auto& c : t.characters) sets.insert(kernel_classes(c, t));
  ClassSet all(t.class_sizes.size());
  std::iota(all.begin(), all.end(), 0);
  sets.insert(all);
  // Close under pairwise intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ClassSet> current(sets.begin(), sets.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        ClassSet meet;
        std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                              std::back_inserter(meet));
        if (sets.insert(meet).second) grew = true;
      }
  }
  std::vector<NormalSubgroup> out;
  for (const auto& s : sets) out.push_back({s, kernel_order(s, t)});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::tie(a.order, a.classes) < std::tie(b.order, b.classes); });
  return out;
}

std::vector<std::vector<std::size_t>> maximal_chains(const std::vector<NormalSubgroup>& lattice) {
  const std::size_t n = lattice.size();
  // Hasse diagram: j covers i when i < j with nothing strictly between.
  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || lattice[i].classes.size() >= lattice[j].classes.size() || !subset(lattice[i].classes, lattice[j].classes))
        continue;
      bool between = false;
      for (std::size_t m = 0; m < n && !between; ++m)
        between = m != i && m != j && lattice[m].classes != lattice[i].classes &&
                  lattice[m].classes != lattice[j].classes && subset(lattice[i].classes, lattice[m].classes) &&
                  subset(lattice[m].classes, lattice[j].classes);
      if (!between) covers[i].push_back(j);
    }
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> path{0};  // sorted by order: index 0 is trivial
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (covers[at].empty()) {
      chains.push_back(path);
      return;
    }
    for (auto next : covers[at]) {
      path.push_back(next);
      walk(next);
      path.pop_back();
    }
  };
  if (n > 0) walk(0);
  return chains;
}

bool chain_is_solvable(const std::vector<NormalSubgroup>& lattice, const std::vector<std::size_t>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!is_prime_power(lattice[chain[i]].order / lattice[chain[i - 1]].order)) return false;
  return true;
}

SolvabilityResult solvable_from_table(const CharacterTable& t) {
  const auto lattice = normal_subgroups(t);
  const auto chains = maximal_chains(lattice);
  SolvabilityResult r;
  const auto& chain = chains.front();
  for (std::size_t i = 1; i < chain.size(); ++i)
    r.chief_factor_orders.push_back(lattice[chain[i]].order / lattice[chain[i - 1]].order);
  r.solvable = chain_is_solvable(lattice, chain);
  r.metadata_mismatch = t.solvable_flag && *t.solvable_flag != r.solvable;
  return r;
}

std::vector<CharEntry> char_entries(const CharacterTable& t) {
  std::vector<CharEntry> out;
  for (const auto& c : t.characters) {
    const std::uint64_t ko = kernel_order(kernel_classes(c, t), t);
    out.push_back({BigInt(static_cast<unsigned long>(c.degree)), BigInt(static_cast<unsigned long>(t.order / ko)), c.label});
  }
  return out;
}

TheoremVerdict theorem_a_check(const CharacterTable& t, const Rational& k, unsigned s) {
  TheoremVerdict v;
  v.criterion = criterion_holds(char_entries(t), k, s);
  v.hypothesis_holds = v.criterion.holds;
  auto sol = solvable_from_table(t);
  v.solvable = sol.solvable;
  v.metadata_mismatch = sol.metadata_mismatch;
  v.k_above_a = k > constant_a();
  // The hypothesis at s <= 2 implies the s = 2 hypothesis; for s > 2 the
  // theorem says nothing.
  v.theorem_applies = v.k_above_a && s <= 2;
  v.consistent_with_theorem = !(v.hypothesis_holds && v.theorem_applies && !v.solvable);
  return v;
}

}  // namespace codegree
