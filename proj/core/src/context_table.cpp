#include "pctx/context_table.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <string>

#include "pctx/errors.hpp"
#include "pctx/rng.hpp"

namespace pctx {

ContextTable make_context_table(int n, int lambda, std::uint64_t seed) {
  if (lambda < 1 || lambda > n) {
    throw InvalidLambdaError("lambda must lie in [1..n], got " +
                             std::to_string(lambda) + " with n = " +
                             std::to_string(n));
  }
  ContextTable table;
  table.n = n;
  table.lambda = lambda;
  table.rows.reserve(static_cast<std::size_t>(n - lambda));
  for (int i = lambda; i < n; ++i) {
    // The row stream depends on (seed, i) only, never on lambda, so the
    // same seed yields nested rows across lambda values.
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    std::vector<int> pool(i);
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < lambda; ++j) {
      const int pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - j)));
      std::swap(pool[j], pool[pick]);
    }
    pool.resize(lambda);
    table.rows.push_back(std::move(pool));
  }
  return table;
}

void write_context_table_csv(const std::filesystem::path& path,
                             const ContextTable& table) {
  std::ofstream out(path);
  if (!out) {
    throw MissingFileError("cannot write context table: " + path.string());
  }
  out << "i,j,m_ij\n";
  for (int i = table.lambda; i < table.n; ++i) {
    const auto& row = table.contexts_of(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (i + 1) << ',' << (j + 1) << ',' << (row[j] + 1) << '\n';
    }
  }
}

namespace {

int parse_int(const std::string& token, const std::string& where) {
  int value = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError(where + ": expected an integer, got \"" + token + "\"");
  }
  return value;
}

}  // namespace

ContextTable read_context_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MissingFileError("cannot open context table: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) ||
      (line != "i,j,m_ij" && line != "i,j,m_ij\r")) {
    throw ParseError(path.string() + ": expected header \"i,j,m_ij\"");
  }

  std::vector<std::pair<int, std::vector<int>>> rows;  // (i, contexts)
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ": row " + std::to_string(lineno);
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                   : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw ParseError(where + ": expected three fields");
    }
    const int i = parse_int(line.substr(0, c1), where) - 1;
    const int j = parse_int(line.substr(c1 + 1, c2 - c1 - 1), where) - 1;
    const int m = parse_int(line.substr(c2 + 1), where) - 1;
    if (i < 1 || j < 0 || m < 0 || m >= i) {
      throw ParseError(where + ": index out of range");
    }
    if (rows.empty() || rows.back().first != i) {
      rows.emplace_back(i, std::vector<int>{});
    }
    if (static_cast<int>(rows.back().second.size()) != j) {
      throw ParseError(where + ": j values must be contiguous from 1");
    }
    rows.back().second.push_back(m);
  }

  ContextTable table;
  if (rows.empty()) return table;

  table.lambda = static_cast<int>(rows.front().second.size());
  table.n = rows.back().first + 1;
  if (rows.front().first != table.lambda) {
    throw ParseError(path.string() + ": first row index does not match row width");
  }
  int expect = table.lambda;
  for (auto& [i, contexts] : rows) {
    if (i != expect++ || static_cast<int>(contexts.size()) != table.lambda) {
      throw ParseError(path.string() + ": rows must cover every i once");
    }
    table.rows.push_back(std::move(contexts));
  }
  return table;
}

}  // namespace pctx
