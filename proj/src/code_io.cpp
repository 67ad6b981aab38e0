#include "gbcode/code_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gbcode/error.hpp"
#include "gbcode/ideals.hpp"

namespace gbcode {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + msg);
}

Word parse_row(const std::string& row, std::size_t line_no) {
  Word w;
  const bool separated = row.find_first_of(" \t,[]()") != std::string::npos;
  if (!separated) {
    for (char c : row) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line_no, "bad symbol in word row");
      w.symbols.push_back(static_cast<PrimeField::Value>(c - '0'));
    }
    return w;
  }
  std::string cleaned = row;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(line_no, "bad symbol in word row");
    }
    w.symbols.push_back(static_cast<PrimeField::Value>(std::stoul(tok)));
  }
  return w;
}

}  // namespace

SystematicCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long q = 0, n = 0, k = 0;
  std::map<std::size_t, std::string> polys;
  bool in_words = false;
  std::vector<Word> words;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      std::istringstream header(line);
      std::string extra;
      if (!(header >> q >> n >> k) || (header >> extra)) fail(line_no, "expected header 'q n k'");
      if (q < 2 || n < 0 || k < 0) fail(line_no, "header values out of range");
      have_header = true;
      continue;
    }
    if (in_words) {
      words.push_back(parse_row(line, line_no));
      continue;
    }
    if (line == "words:") {
      if (!polys.empty()) fail(line_no, "cannot mix poly lines and a word list");
      in_words = true;
      continue;
    }
    if (line.rfind("poly", 0) == 0) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(line_no, "expected 'poly j: <polynomial>'");
      std::size_t j = 0;
      try {
        j = std::stoul(trim(std::string_view(line).substr(4, colon - 4)));
      } catch (const std::exception&) {
        fail(line_no, "bad polynomial index");
      }
      if (!polys.emplace(j, line.substr(colon + 1)).second) fail(line_no, "duplicate poly " + std::to_string(j));
      continue;
    }
    fail(line_no, "unrecognized line '" + line + "'");
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "missing header 'q n k'");

  const PrimeField field(static_cast<PrimeField::Value>(q));
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidInput, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (in_words) {
    SystematicCode code = interpolate_systematic(words, field.modulus());
    if (code.n() != static_cast<std::size_t>(n) || code.k() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kNotSystematic, "word list does not match the header's n and k");
    }
    return code;
  }
  const RingPtr ring = SystematicCode::message_ring(field, static_cast<std::size_t>(k));
  std::vector<Polynomial> f;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(n - k); ++j) {
    const auto it = polys.find(j);
    if (it == polys.end()) throw Error(ErrorCode::kParseError, "missing 'poly " + std::to_string(j) + "'");
    f.push_back(parse_polynomial(it->second, ring));
  }
  if (polys.size() != f.size()) throw Error(ErrorCode::kParseError, "poly index outside 1..n-k");
  return SystematicCode(static_cast<std::size_t>(n), static_cast<std::size_t>(k), field, std::move(f));
}

SystematicCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open code file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

std::string format_code(const SystematicCode& code) {
  std::ostringstream out;
  out << code.q() << ' ' << code.n() << ' ' << code.k() << '\n';
  for (std::size_t j = 0; j < code.f().size(); ++j) out << "poly " << j + 1 << ": " << code.f()[j].to_string() << '\n';
  return out.str();
}

}  // namespace gbcode
