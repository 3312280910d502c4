#include "ballotrank/margins.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ballotrank {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::self_loops:
      return "self_loops";
    case Variant::no_self_loops:
      return "no_self_loops";
    case Variant::unweighted:
      return "unweighted";
  }
  return "?";
}

MarginAggregates aggregates(const MarginMatrix& m) {
  const int n = m.n();
  MarginAggregates agg;
  agg.total_wins.assign(n, 0);
  agg.total_losses_raw.assign(n, 0);
  agg.total_losses.assign(n, Rational(0));
  agg.beats.assign(n, {});
  agg.loss_counts.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Rational& v = m.at(a, b);
      if (v == 0) continue;
      // Off-diagonal margins are integers by construction.
      long long margin = v.numerator() / v.denominator();
      agg.total_wins[a] += margin;
      agg.total_losses_raw[b] += margin;
      agg.beats[a].push_back(b);
      agg.loss_counts[b] += 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    agg.total_wins_sum += agg.total_wins[a];
    agg.total_losses[a] = Rational(agg.total_losses_raw[a]) +
                          (m.has_diagonal ? m.at(a, a) : Rational(0));
  }
  return agg;
}

MarginMatrix apply_self_loops(const MarginMatrix& m) {
  if (m.has_diagonal)
    throw std::invalid_argument("margins already carry self-loops");
  MarginAggregates agg = aggregates(m);
  MarginMatrix out = m;
  out.has_diagonal = true;
  if (agg.total_wins_sum == 0) {
    out.degenerate = true;  // every contest tied; diagonal stays zero
    return out;
  }
  for (int a = 0; a < out.n(); ++a)
    out.at(a, a) = Rational(agg.total_wins[a], agg.total_wins_sum);
  return out;
}

std::vector<Rational> normalize_exact(const MarginMatrix& m, Variant kind) {
  const int n = m.n();
  if (n == 0) throw std::invalid_argument("empty margin matrix");
  if (kind == Variant::self_loops && !m.has_diagonal)
    throw std::invalid_argument("self-loop normalization needs a diagonal");
  if (kind != Variant::self_loops && m.has_diagonal)
    throw std::invalid_argument("variant expects raw margins (no diagonal)");

  std::vector<Rational> out(static_cast<size_t>(n) * n, Rational(0));
  auto entry = [&](int a, int b) -> Rational& {
    return out[static_cast<size_t>(a) * n + b];
  };
  if (kind == Variant::unweighted) {
    for (int b = 0; b < n; ++b) {
      long long losses = 0;
      for (int a = 0; a < n; ++a)
        if (a != b && m.at(a, b) > 0) ++losses;
      if (losses == 0) {
        entry(b, b) = Rational(1);  // undefeated: mass stays put
        continue;
      }
      for (int a = 0; a < n; ++a)
        if (a != b && m.at(a, b) > 0) entry(a, b) = Rational(1, losses);
    }
    return out;
  }
  for (int b = 0; b < n; ++b) {
    Rational colsum(0);
    for (int a = 0; a < n; ++a) {
      if (a == b && kind == Variant::no_self_loops) continue;
      colsum += m.at(a, b);
    }
    if (colsum == 0) {
      entry(b, b) = Rational(1);
      continue;
    }
    for (int a = 0; a < n; ++a) {
      if (a == b && kind == Variant::no_self_loops) continue;
      if (m.at(a, b) != 0) entry(a, b) = m.at(a, b) / colsum;
    }
  }
  return out;
}

TransitionMatrix normalize(const MarginMatrix& m, Variant kind) {
  std::vector<Rational> exact = normalize_exact(m, kind);
  TransitionMatrix t;
  t.names = m.names;
  t.kind = kind;
  t.entries.resize(exact.size());
  for (size_t i = 0; i < exact.size(); ++i) t.entries[i] = to_double(exact[i]);
  return t;
}

std::string to_dot(const TransitionMatrix& t) {
  const int n = t.n();
  std::ostringstream out;
  out << "digraph margins {\n  rankdir=LR;\n";
  char buf[64];
  for (int i = 0; i < n; ++i) {
    double self = t.at(i, i);
    out << "  \"" << t.names[i] << "\"";
    if (self > 0) {
      std::snprintf(buf, sizeof buf, "%.4g", self);
      out << " [label=\"" << t.names[i] << "\\nself " << buf << "\"]";
    }
    out << ";\n";
  }
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (a == b || t.at(a, b) <= 0) continue;
      std::snprintf(buf, sizeof buf, "%.4g", t.at(a, b));
      out << "  \"" << t.names[b] << "\" -> \"" << t.names[a]
          << "\" [label=\"" << buf << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ballotrank
