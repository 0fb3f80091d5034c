#include "rlr/specfile.hpp"

#include <cctype>
#include <map>

namespace rlr {

namespace {

struct Line {
  int number;
  std::string key;
  std::string value;
  int value_col;  // 1-based column where the value starts
};

std::string trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (leading) *leading = b;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string stripped = trim(raw);
    if (!stripped.empty()) {
      std::size_t eq = raw.find('=');
      if (eq == std::string_view::npos) throw SpecError(number, 1, "expected 'key = value'");
      Line line;
      line.number = number;
      line.key = trim(raw.substr(0, eq));
      std::size_t lead = 0;
      line.value = trim(raw.substr(eq + 1), &lead);
      line.value_col = static_cast<int>(eq + 2 + lead);
      if (line.key.empty()) throw SpecError(number, 1, "missing key");
      if (line.value.empty()) throw SpecError(number, line.value_col, "missing value");
      out.push_back(std::move(line));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

long parse_int(const Line& line) {
  try {
    std::size_t used = 0;
    long v = std::stol(line.value, &used);
    if (used != line.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SpecError(line.number, line.value_col, "expected an integer");
  }
}

bool parse_bool(const Line& line) {
  if (line.value == "true" || line.value == "1") return true;
  if (line.value == "false" || line.value == "0") return false;
  throw SpecError(line.number, line.value_col, "expected true or false");
}

// c[i,j,k] / anchor[i,j] / pop[i,k] -> name + 1-based indices
bool parse_indexed_key(const std::string& key, std::string& name, std::vector<int>& indices) {
  std::size_t lb = key.find('[');
  if (lb == std::string::npos || key.back() != ']') return false;
  name = key.substr(0, lb);
  indices.clear();
  std::size_t pos = lb + 1;
  while (pos < key.size() - 1) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string::npos || comma > key.size() - 1) comma = key.size() - 1;
    try {
      indices.push_back(std::stoi(key.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      return false;
    }
    pos = comma + 1;
  }
  return !indices.empty();
}

RingElement parse_poly_value(const RingSpec& ring, const Line& line) {
  try {
    return parse_ring_element(ring, line.value);
  } catch (const std::invalid_argument& e) {
    throw SpecError(line.number, line.value_col, e.what());
  }
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  std::vector<Line> lines = split_lines(text);

  // scalar keys first; they may appear in any order
  std::map<std::string, const Line*> scalars;
  for (const Line& line : lines) {
    if (line.key == "p" || line.key == "nvars" || line.key == "truncated" ||
        line.key == "rank" || line.key == "builtin") {
      if (scalars.count(line.key))
        throw SpecError(line.number, 1, "duplicate key '" + line.key + "'");
      scalars[line.key] = &line;
    }
  }

  std::optional<std::string> builtin;
  if (auto it = scalars.find("builtin"); it != scalars.end()) {
    builtin = it->second->value;
    if (*builtin != "witt" && *builtin != "derivations" && *builtin != "abelian")
      throw SpecError(it->second->number, it->second->value_col,
                      "unknown builtin (expected witt, derivations, or abelian)");
  }

  auto it_p = scalars.find("p");
  if (it_p == scalars.end()) throw SpecError(1, 1, "missing key 'p'");
  long p_value = parse_int(*it_p->second);
  if (p_value < 2 || !is_prime(static_cast<std::uint32_t>(p_value)))
    throw SpecError(it_p->second->number, it_p->second->value_col, "p must be prime");

  int nvars = 1;
  if (auto it = scalars.find("nvars"); it != scalars.end()) {
    long v = parse_int(*it->second);
    if (v < 0) throw SpecError(it->second->number, it->second->value_col, "nvars must be >= 0");
    nvars = static_cast<int>(v);
  }
  if (builtin && *builtin == "witt" && nvars != 1)
    throw SpecError(scalars["nvars"]->number, scalars["nvars"]->value_col,
                    "the witt builtin has nvars = 1");

  bool truncated = true;  // builtins default to the finite-dimensional quotient
  if (!builtin) truncated = false;
  if (auto it = scalars.find("truncated"); it != scalars.end())
    truncated = parse_bool(*it->second);

  RingSpec ring(static_cast<std::uint32_t>(p_value), nvars, truncated);

  SpecFile out;
  out.builtin = builtin;

  std::optional<int> rank;
  if (auto it = scalars.find("rank"); it != scalars.end()) {
    long v = parse_int(*it->second);
    if (v < 0) throw SpecError(it->second->number, it->second->value_col, "rank must be >= 0");
    rank = static_cast<int>(v);
  }

  if (builtin) {
    if (*builtin == "witt" || *builtin == "derivations") {
      if (rank && *rank != nvars)
        throw SpecError(scalars["rank"]->number, scalars["rank"]->value_col,
                        "rank of a derivation algebra equals nvars");
      out.presentation = build_derivation_algebra(ring);
    } else {  // abelian
      if (!rank) throw SpecError(1, 1, "the abelian builtin needs an explicit rank");
      out.presentation = build_abelian(ring, *rank);
    }
  } else {
    if (!rank) throw SpecError(1, 1, "missing key 'rank' (or a builtin selector)");
    out.presentation = LRPresentation::empty(ring, *rank);
  }
  const int m = out.presentation.rank;

  // track explicitly given bracket entries so antisymmetry conflicts are caught
  std::map<std::tuple<int, int, int>, const Line*> given_c;

  for (const Line& line : lines) {
    if (scalars.count(line.key) && scalars[line.key] == &line) continue;
    if (line.key == "localize") {
      std::size_t pos = 0;
      const std::string& v = line.value;
      while (pos <= v.size()) {
        std::size_t comma = v.find(',', pos);
        if (comma == std::string::npos) comma = v.size();
        std::string piece = trim(std::string_view(v).substr(pos, comma - pos));
        if (piece.empty())
          throw SpecError(line.number, line.value_col, "empty multiplicative-set generator");
        RingElement g = [&] {
          try {
            return parse_ring_element(ring, piece);
          } catch (const std::invalid_argument& e) {
            throw SpecError(line.number, line.value_col, e.what());
          }
        }();
        if (g.is_zero())
          throw SpecError(line.number, line.value_col, "zero multiplicative-set generator");
        out.localize_gens.push_back(std::move(g));
        if (comma == v.size()) break;
        pos = comma + 1;
      }
      continue;
    }

    std::string name;
    std::vector<int> idx;
    if (!parse_indexed_key(line.key, name, idx))
      throw SpecError(line.number, 1, "unknown key '" + line.key + "'");
    if (builtin)
      throw SpecError(line.number, 1, "builtin specs do not take explicit structure entries");
    auto check_index = [&](int v, int bound, const char* what) {
      if (v < 1 || v > bound)
        throw SpecError(line.number, 1, std::string(what) + " index out of range");
      return v - 1;
    };
    if (name == "c" && idx.size() == 3) {
      int i = check_index(idx[0], m, "basis");
      int j = check_index(idx[1], m, "basis");
      int k = check_index(idx[2], m, "basis");
      RingElement v = parse_poly_value(ring, line);
      if (i == j && !v.is_zero())
        throw SpecError(line.number, line.value_col, "c[i,i,k] must be zero");
      if (auto mirror = given_c.find({j, i, k}); mirror != given_c.end()) {
        if (!(out.presentation.bracket_sc[j][i][k] == -v))
          throw SpecError(line.number, line.value_col,
                          "conflicts with antisymmetry of c[" + std::to_string(idx[1]) + "," +
                              std::to_string(idx[0]) + "," + std::to_string(idx[2]) + "]");
      }
      out.presentation.bracket_sc[i][j][k] = v;
      if (!given_c.count({j, i, k})) out.presentation.bracket_sc[j][i][k] = -v;
      given_c[{i, j, k}] = &line;
    } else if (name == "anchor" && idx.size() == 2) {
      int i = check_index(idx[0], m, "basis");
      int j = check_index(idx[1], ring.nvars, "ring generator");
      std::vector<RingElement> images = out.presentation.anchor_img[i].images();
      images[j] = parse_poly_value(ring, line);
      out.presentation.anchor_img[i] = Derivation(ring, std::move(images));
    } else if (name == "pop" && idx.size() == 2) {
      int i = check_index(idx[0], m, "basis");
      int k = check_index(idx[1], m, "basis");
      out.presentation.pop_img[i][k] = parse_poly_value(ring, line);
    } else {
      throw SpecError(line.number, 1, "unknown key '" + line.key + "'");
    }
  }

  out.presentation.check_shape();
  return out;
}

std::string print_spec(const SpecFile& spec) {
  const LRPresentation& pres = spec.presentation;
  std::string out;
  out += "p = " + std::to_string(pres.ring.p) + "\n";
  out += "nvars = " + std::to_string(pres.ring.nvars) + "\n";
  out += std::string("truncated = ") + (pres.ring.truncated ? "true" : "false") + "\n";
  if (spec.builtin) {
    out += "builtin = " + *spec.builtin + "\n";
    if (*spec.builtin == "abelian") out += "rank = " + std::to_string(pres.rank) + "\n";
  } else {
    out += "rank = " + std::to_string(pres.rank) + "\n";
    for (int i = 0; i < pres.rank; ++i)
      for (int j = i + 1; j < pres.rank; ++j)
        for (int k = 0; k < pres.rank; ++k)
          if (!pres.bracket_sc[i][j][k].is_zero())
            out += "c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                   std::to_string(k + 1) + "] = " + pres.bracket_sc[i][j][k].to_string() + "\n";
    for (int i = 0; i < pres.rank; ++i)
      for (int j = 0; j < pres.ring.nvars; ++j)
        if (!pres.anchor_img[i].image(j).is_zero())
          out += "anchor[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 "] = " + pres.anchor_img[i].image(j).to_string() + "\n";
    for (int i = 0; i < pres.rank; ++i)
      for (int k = 0; k < pres.rank; ++k)
        if (!pres.pop_img[i][k].is_zero())
          out += "pop[" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                 "] = " + pres.pop_img[i][k].to_string() + "\n";
  }
  if (!spec.localize_gens.empty()) {
    out += "localize = ";
    for (std::size_t i = 0; i < spec.localize_gens.size(); ++i) {
      if (i) out += ", ";
      out += spec.localize_gens[i].to_string();
    }
    out += "\n";
  }
  return out;
}

}  // namespace rlr
