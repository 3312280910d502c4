#pragma once

// Ballot profiles and pairwise margin matrices, plus the two input parsers.
//
// Ballot file format:
//   # comment
//   candidates: a, b, c
//   3: a > b > c        (multiplicity prefix optional, defaults to 1)
//   b > c               (partial ballots allowed)
//
// Margin CSV format: first line is the comma-separated candidate names,
// followed by an n x n block of nonnegative integers where cell (i,j) is the
// margin by which candidate i beats candidate j (zero diagonal, and at most
// one of (i,j)/(j,i) may be positive).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ballotrank {

// Exact fraction type used for self-loop weights and exact column
// normalization. Margins stay well inside int64 even after cross-multiplying.
using Rational = boost::rational<long long>;

double to_double(const Rational& r);

// Parse failure with a 1-based line number; the CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct Candidate {
  int id = 0;  // index into Profile::candidates, stable declaration order
  std::string name;
};

struct Ballot {
  std::vector<int> ranking;  // candidate ids, most preferred first, no repeats
  long long multiplicity = 1;
};

struct Profile {
  std::vector<Candidate> candidates;
  std::vector<Ballot> ballots;

  int num_candidates() const { return static_cast<int>(candidates.size()); }
  long long num_voters() const;  // sum of multiplicities
  bool complete() const;         // every ballot ranks every candidate
  const std::string& name_of(int id) const { return candidates[id].name; }
  int id_of(const std::string& name) const;  // -1 when unknown
};

Profile parse_ballot_file(std::istream& in);
Profile parse_ballot_file(const std::string& path);

// Inverse of parse_ballot_file: parse(serialize(p)) reproduces p exactly,
// including ballot order and multiplicities.
std::string serialize_profile(const Profile& p);

struct MarginMatrix {
  std::vector<std::string> names;
  // Row-major; at(a,b) is the margin of a over b. Off-diagonal entries are
  // integers; the diagonal holds rational self-loop weights once installed.
  std::vector<Rational> entries;
  bool has_diagonal = false;  // self-loop weights installed (see margins.hpp)
  bool degenerate = false;    // every pairwise contest tied

  int n() const { return static_cast<int>(names.size()); }
  const Rational& at(int a, int b) const {
    return entries[static_cast<size_t>(a) * names.size() + b];
  }
  Rational& at(int a, int b) {
    return entries[static_cast<size_t>(a) * names.size() + b];
  }
  static MarginMatrix zero(std::vector<std::string> names);
};

// wins[a*n+b] = number of voters ranking a above b. Candidates are compared
// only on ballots listing both of them.
std::vector<long long> pairwise_wins(const Profile& p);

// Net margins: at(a,b) = max(0, wins(a,b) - wins(b,a)); zero diagonal.
MarginMatrix profile_to_margins(const Profile& p);

MarginMatrix parse_margin_csv(std::istream& in);
MarginMatrix parse_margin_csv(const std::string& path);

// Serializes the off-diagonal margins back to CSV (zero diagonal); the
// round trip parse(to_csv(m)) preserves names and margins.
std::string to_csv(const MarginMatrix& m);

}  // namespace ballotrank
