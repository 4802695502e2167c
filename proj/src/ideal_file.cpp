#include "toric/ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

struct PendingBlock {
  std::string name;
  std::size_t line = 0;
  std::optional<VariableSet> vars;
  std::optional<VariableSet> params;
  std::size_t params_line = 0;
  std::vector<IntVector> rows;
  std::vector<std::pair<std::size_t, std::string>> gens;
};

VariableSet names_from(const std::vector<std::string>& words, std::size_t line) {
  std::vector<std::string> names(words.begin() + 1, words.end());
  for (const auto& n : names)
    if (!is_identifier(n)) throw ParseError(line, "invalid name '" + n + "'");
  try {
    return VariableSet(std::move(names));
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

IdealBlock finish(PendingBlock&& p, const ParseOptions& options) {
  if (!p.vars) throw ParseError(p.line, "ideal " + p.name + " has no 'vars' line");
  if (!p.params) throw ParseError(p.line, "ideal " + p.name + " has no 'params' line");
  if (p.rows.size() != p.params->size())
    throw ParseError(p.params_line, "ideal " + p.name + " has " + std::to_string(p.rows.size()) + " rows but " +
                                        std::to_string(p.params->size()) + " parameters");
  IdealBlock block;
  block.name = std::move(p.name);
  block.line = p.line;
  try {
    block.parametrization = Parametrization(*p.params, *p.vars, IntegerMatrix::from_rows(p.rows, p.vars->size()),
                                            options.degeneracy);
  } catch (const Error& e) {
    throw ParseError(p.line, "ideal " + block.name + ": " + e.what());
  }
  if (!p.gens.empty()) {
    block.generators.emplace();
    for (const auto& [line, text] : p.gens) {
      try {
        block.generators->push_back(parse_binomial(*p.vars, text));
      } catch (const ParseError& e) {
        throw ParseError(line, e.what());
      }
    }
  }
  return block;
}

} // namespace

std::vector<IdealBlock> parse_ideal_file(std::string_view text, const ParseOptions& options) {
  std::vector<IdealBlock> blocks;
  std::optional<PendingBlock> current;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& keyword = words.front();

    if (keyword == "ideal") {
      if (words.size() != 2 || !is_identifier(words[1]))
        throw ParseError(line_no, "expected 'ideal NAME'");
      if (current) blocks.push_back(finish(std::move(*current), options));
      for (const auto& b : blocks)
        if (b.name == words[1]) throw ParseError(line_no, "duplicate ideal name '" + words[1] + "'");
      current.emplace();
      current->name = words[1];
      current->line = line_no;
      continue;
    }
    if (!current) throw ParseError(line_no, "'" + keyword + "' outside of an ideal block");

    if (keyword == "vars") {
      if (current->vars) throw ParseError(line_no, "second 'vars' line in ideal " + current->name);
      if (!current->rows.empty() || !current->gens.empty())
        throw ParseError(line_no, "'vars' must precede rows and generators");
      current->vars = names_from(words, line_no);
    } else if (keyword == "params") {
      if (current->params) throw ParseError(line_no, "second 'params' line in ideal " + current->name);
      current->params = names_from(words, line_no);
      current->params_line = line_no;
    } else if (keyword == "row") {
      if (!current->vars) throw ParseError(line_no, "'row' before 'vars'");
      if (words.size() - 1 != current->vars->size())
        throw ParseError(line_no, "row has " + std::to_string(words.size() - 1) + " entries but ideal " +
                                      current->name + " has " + std::to_string(current->vars->size()) +
                                      " variables");
      IntVector row;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!is_integer_literal(words[i])) throw ParseError(line_no, "malformed integer '" + words[i] + "'");
        row.emplace_back(words[i][0] == '+' ? words[i].substr(1) : words[i], 10);
      }
      current->rows.push_back(std::move(row));
    } else if (keyword == "gen") {
      if (!current->vars) throw ParseError(line_no, "'gen' before 'vars'");
      const auto pos = line.find("gen");
      current->gens.emplace_back(line_no, line.substr(pos + 3));
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (current) blocks.push_back(finish(std::move(*current), options));
  return blocks;
}

std::vector<IdealBlock> read_ideal_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_ideal_file(text.str(), options);
}

std::string format_ideal_block(const IdealBlock& block) {
  const Parametrization& p = block.parametrization;
  std::string out = "ideal " + block.name + "\nvars";
  for (const auto& v : p.vars().names()) out += " " + v;
  out += "\nparams";
  for (const auto& t : p.params().names()) out += " " + t;
  out += "\n";
  for (std::size_t i = 0; i < p.nparams(); ++i) {
    out += "row";
    for (std::size_t j = 0; j < p.nvars(); ++j) out += " " + p.matrix()(i, j).get_str();
    out += "\n";
  }
  if (block.generators)
    for (const auto& g : *block.generators) out += "gen " + format_binomial(p.vars(), g) + "\n";
  return out;
}

std::string format_ideal_file(std::span<const IdealBlock> blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "\n";
    out += format_ideal_block(blocks[i]);
  }
  return out;
}

} // namespace toric
