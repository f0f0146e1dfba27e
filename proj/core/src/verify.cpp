#include "combinadics/verify.hpp"

#include <future>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "combinadics/binomial.hpp"
#include "combinadics/combination.hpp"
#include "combinadics/errors.hpp"

namespace combinadics {

std::string VerifyReport::serialize() const {
  std::ostringstream out;
  out << "RESULT " << (pass() ? "pass" : "fail") << '\n';
  out << "COVERED " << values_covered << '\n';
  for (const DuplicateEntry& dup : duplicates) {
    out << "DUPLICATE " << dup.value << ' ' << dup.first << ' ' << dup.second << '\n';
  }
  for (const Natural& gap : gaps) {
    out << "GAP " << gap << '\n';
  }
  out << "IDENTITIES " << identities_checked << ' ' << identities_failed << '\n';
  return out.str();
}

namespace {

Combinadic tuple_to_combinadic(const std::vector<unsigned long>& tuple) {
  std::vector<Natural> coeffs;
  coeffs.reserve(tuple.size());
  for (unsigned long c : tuple) coeffs.emplace_back(c);
  return Combinadic::from_coefficients(std::move(coeffs));
}

// Value of a raw descending tuple by direct summation of binomial terms.
// Deliberately bypasses decode/encode: the sweeps are the independent
// witness for those.
Natural tuple_value(const std::vector<unsigned long>& tuple) {
  const std::size_t r = tuple.size();
  Natural sum;
  mpz_class term;
  for (std::size_t p = 0; p < r; ++p) {
    const unsigned long index = static_cast<unsigned long>(r - p);
    detail::binomial_assign_ui(term, tuple[p], index);
    sum.mpz() += term;
  }
  return sum;
}

// Advances a descending tuple (storage order C_r..C_1) to its lexicographic
// successor under the bound C_r < bound. Returns false when exhausted.
bool next_tuple(std::vector<unsigned long>& t, unsigned long bound) {
  const std::size_t r = t.size();
  for (std::size_t p = r; p-- > 0;) {
    const unsigned long limit = (p == 0) ? bound : t[p - 1];
    if (t[p] + 1 < limit) {
      ++t[p];
      for (std::size_t q = p + 1; q < r; ++q) {
        t[q] = static_cast<unsigned long>(r - 1 - q);
      }
      return true;
    }
  }
  return false;
}

struct RoundtripChunk {
  std::vector<DuplicateEntry> duplicates;
  std::vector<Natural> gaps;
};

// Checks decode(encode(m)) = m and successor(encode(m)) = encode(m+1) for
// every m in [first, last).
RoundtripChunk roundtrip_range(std::size_t r, const Natural& first, const Natural& last) {
  RoundtripChunk chunk;
  Natural m = first;
  Combinadic current = encode(m, r);
  while (m < last) {
    if (decode(current) != m) {
      chunk.gaps.push_back(m);
    }
    Natural m_next = m + 1;
    Combinadic expected = encode(m_next, r);
    Combinadic stepped = successor(current);
    if (stepped != expected) {
      chunk.duplicates.push_back({m_next, std::move(stepped), expected});
    }
    current = std::move(expected);
    m = std::move(m_next);
  }
  return chunk;
}

}  // namespace

VerifyReport sweep_uniqueness(std::size_t r, const Natural& coefficient_bound) {
  if (r == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  }
  if (coefficient_bound < Natural(r)) {
    throw Error(ErrorKind::InvalidArgument,
                "coefficient bound " + coefficient_bound.str() +
                    " admits no valid degree-" + std::to_string(r) + " tuples");
  }

  VerifyReport report;
  report.degree = r;
  report.coefficient_bound = coefficient_bound;

  const unsigned long bound = coefficient_bound.to_ulong();
  const Natural total = binomial(coefficient_bound, Natural(r));

  // First tuple in lexicographic order is the zero representation.
  std::vector<unsigned long> tuple(r);
  for (std::size_t p = 0; p < r; ++p) {
    tuple[p] = static_cast<unsigned long>(r - 1 - p);
  }

  std::map<Natural, std::vector<unsigned long>> seen;
  do {
    Natural value = tuple_value(tuple);
    auto [it, inserted] = seen.emplace(std::move(value), tuple);
    if (!inserted) {
      report.duplicates.push_back(
          {it->first, tuple_to_combinadic(it->second), tuple_to_combinadic(tuple)});
    }
  } while (next_tuple(tuple, bound));

  for (Natural v; v < total; ++v) {
    if (auto it = seen.find(v); it != seen.end()) {
      ++report.values_covered;
    } else {
      report.gaps.push_back(v);
    }
  }
  return report;
}

VerifyReport sweep_roundtrip(std::size_t r, const Natural& m_max) {
  if (r == 0) {
    throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  }

  VerifyReport report;
  report.degree = r;
  report.values_covered = m_max + 1;

  const Natural end = m_max + 1;  // half-open sweep over [0, m_max]
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (end < Natural(4096)) workers = 1;

  // The chunking is only a throughput device: chunk results are merged in
  // range order, so the report matches a sequential sweep exactly.
  auto intervals = split_range(r, Natural(0), end, workers);
  std::vector<std::future<RoundtripChunk>> futures;
  for (const auto& [first, last] : intervals) {
    if (first == last) continue;
    futures.push_back(std::async(std::launch::async, roundtrip_range, r, first, last));
  }
  for (auto& fut : futures) {
    RoundtripChunk chunk = fut.get();
    for (auto& dup : chunk.duplicates) report.duplicates.push_back(std::move(dup));
    for (auto& gap : chunk.gaps) report.gaps.push_back(std::move(gap));
  }
  return report;
}

VerifyReport sweep_identities(std::size_t n_max, std::size_t r_max) {
  VerifyReport report;

  auto check = [&report](bool ok) {
    ++report.identities_checked;
    if (!ok) ++report.identities_failed;
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t r = 1; r <= r_max; ++r) {
      auto [lhs, rhs] = pascal_lhs_rhs(Natural(n), Natural(r));
      check(lhs == rhs);
    }
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      auto [lhs, rhs] = hockey_stick_lhs_rhs(Natural(n), Natural(r));
      check(lhs == rhs);
    }
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t r = 1; r <= r_max; ++r) {
      auto [lhs, rhs] = gap_lhs_rhs(Natural(n), Natural(r));
      check(lhs == rhs + 1);
    }
  }
  // Strict growth in n, adjacent pairs; transitivity covers the rest.
  for (std::size_t r = 1; r <= r_max; ++r) {
    for (std::size_t n1 = r; n1 + 1 <= n_max; ++n1) {
      check(binomial(Natural(n1), Natural(r)) < binomial(Natural(n1 + 1), Natural(r)));
    }
  }
  return report;
}

}  // namespace combinadics
