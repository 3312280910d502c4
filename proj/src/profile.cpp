#include "ballotrank/profile.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ballotrank {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

void check_name(const std::string& name, int line) {
  if (name.empty()) throw ParseError(line, "empty candidate name");
  for (char c : name) {
    if (c == ',' || c == '>' || c == ':' || c == '#' || c == '\n' || c == '\r')
      throw ParseError(line, "candidate name '" + name +
                                 "' contains a separator character");
  }
}

long long parse_count(const std::string& s, int line, const char* what) {
  std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError(line, std::string("malformed ") + what + " '" + t + "'");
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(t.c_str(), &end, 10);
  if (errno != 0 || end != t.c_str() + t.size())
    throw ParseError(line, std::string(what) + " out of range: '" + t + "'");
  return v;
}

}  // namespace

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

long long Profile::num_voters() const {
  long long total = 0;
  for (const auto& b : ballots) total += b.multiplicity;
  return total;
}

bool Profile::complete() const {
  for (const auto& b : ballots)
    if (b.ranking.size() != candidates.size()) return false;
  return true;
}

int Profile::id_of(const std::string& name) const {
  for (const auto& c : candidates)
    if (c.name == name) return c.id;
  return -1;
}

Profile parse_ballot_file(std::istream& in) {
  Profile p;
  std::string raw;
  int line_no = 0;
  bool have_candidates = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_candidates) {
      auto colon = line.find(':');
      if (colon == std::string::npos ||
          trim(line.substr(0, colon)) != "candidates")
        throw ParseError(line_no, "expected 'candidates: ...' header");
      for (const std::string& piece : split(line.substr(colon + 1), ',')) {
        std::string name = trim(piece);
        check_name(name, line_no);
        if (p.id_of(name) >= 0)
          throw ParseError(line_no, "duplicate candidate '" + name + "'");
        p.candidates.push_back({p.num_candidates(), name});
      }
      have_candidates = true;
      continue;
    }
    Ballot b;
    std::string ranking_part = line;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      b.multiplicity = parse_count(line.substr(0, colon), line_no,
                                   "ballot multiplicity");
      if (b.multiplicity <= 0)
        throw ParseError(line_no, "ballot multiplicity must be positive");
      ranking_part = line.substr(colon + 1);
    }
    for (const std::string& piece : split(ranking_part, '>')) {
      std::string name = trim(piece);
      if (name.empty())
        throw ParseError(line_no, "empty entry in ranking");
      int id = p.id_of(name);
      if (id < 0)
        throw ParseError(line_no, "unknown candidate '" + name + "'");
      if (std::find(b.ranking.begin(), b.ranking.end(), id) !=
          b.ranking.end())
        throw ParseError(line_no,
                         "candidate '" + name + "' listed twice on a ballot");
      b.ranking.push_back(id);
    }
    p.ballots.push_back(std::move(b));
  }
  if (!have_candidates)
    throw ParseError(line_no == 0 ? 1 : line_no,
                     "no 'candidates:' header found");
  return p;
}

Profile parse_ballot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_ballot_file(in);
}

std::string serialize_profile(const Profile& p) {
  std::ostringstream out;
  out << "candidates: ";
  for (int i = 0; i < p.num_candidates(); ++i) {
    if (i) out << ", ";
    out << p.candidates[i].name;
  }
  out << "\n";
  for (const auto& b : p.ballots) {
    out << b.multiplicity << ": ";
    for (size_t i = 0; i < b.ranking.size(); ++i) {
      if (i) out << " > ";
      out << p.name_of(b.ranking[i]);
    }
    out << "\n";
  }
  return out.str();
}

MarginMatrix MarginMatrix::zero(std::vector<std::string> names) {
  MarginMatrix m;
  m.entries.assign(names.size() * names.size(), Rational(0));
  m.names = std::move(names);
  return m;
}

std::vector<long long> pairwise_wins(const Profile& p) {
  const int n = p.num_candidates();
  std::vector<long long> wins(static_cast<size_t>(n) * n, 0);
  for (const auto& b : p.ballots) {
    for (size_t i = 0; i < b.ranking.size(); ++i) {
      for (size_t j = i + 1; j < b.ranking.size(); ++j) {
        wins[static_cast<size_t>(b.ranking[i]) * n + b.ranking[j]] +=
            b.multiplicity;
      }
    }
  }
  return wins;
}

MarginMatrix profile_to_margins(const Profile& p) {
  const int n = p.num_candidates();
  if (n == 0) throw std::invalid_argument("profile has no candidates");
  std::vector<std::string> names;
  for (const auto& c : p.candidates) names.push_back(c.name);
  MarginMatrix m = MarginMatrix::zero(std::move(names));
  std::vector<long long> wins = pairwise_wins(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      long long ab = wins[static_cast<size_t>(a) * n + b];
      long long ba = wins[static_cast<size_t>(b) * n + a];
      if (ab > ba) m.at(a, b) = Rational(ab - ba);
      if (ba > ab) m.at(b, a) = Rational(ba - ab);
    }
  }
  return m;
}

MarginMatrix parse_margin_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string raw;
  int line_no = 0;
  std::vector<int> row_lines;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError(1, "empty margin file");
  std::vector<std::string> names;
  for (const std::string& cell : rows[0]) {
    std::string name = trim(cell);
    check_name(name, row_lines[0]);
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw ParseError(row_lines[0], "duplicate candidate '" + name + "'");
    names.push_back(name);
  }
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(rows.size()) != n + 1)
    throw ParseError(row_lines.back(),
                     "expected " + std::to_string(n) + " data rows, found " +
                         std::to_string(rows.size() - 1));
  MarginMatrix m = MarginMatrix::zero(names);
  for (int r = 0; r < n; ++r) {
    const auto& cells = rows[r + 1];
    int ln = row_lines[r + 1];
    if (static_cast<int>(cells.size()) != n)
      throw ParseError(ln, "expected " + std::to_string(n) +
                               " cells, found " +
                               std::to_string(cells.size()));
    for (int c = 0; c < n; ++c) {
      long long v = parse_count(cells[c], ln, "margin");
      if (r == c && v != 0)
        throw ParseError(ln, "nonzero diagonal margin for '" + names[r] + "'");
      m.at(r, c) = Rational(v);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (m.at(a, b) > 0 && m.at(b, a) > 0)
        throw ParseError(row_lines.back(),
                         "margins " + names[a] + "/" + names[b] +
                             " are positive in both directions");
    }
  }
  return m;
}

MarginMatrix parse_margin_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_margin_csv(in);
}

std::string to_csv(const MarginMatrix& m) {
  std::ostringstream out;
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    if (i) out << ",";
    out << m.names[i];
  }
  out << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ",";
      out << (a == b ? 0 : m.at(a, b).numerator());
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ballotrank
