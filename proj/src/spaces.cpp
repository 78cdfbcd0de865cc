#include "qformlab/spaces.hpp"

#include <map>
#include <mutex>
#include <set>
#include <utility>

namespace qformlab {

const std::vector<DirichletChar>& supported_characters() {
  static const std::vector<DirichletChar> chars{DirichletChar(-3), DirichletChar(-4), DirichletChar(-8),
                                                DirichletChar(-24)};
  return chars;
}

std::size_t bundled_dimension(const DirichletChar& chi) {
  switch (chi.discriminant()) {
    case -3: case -4: return 12;
    case -8: case -24: return 10;
    default: throw std::invalid_argument("no bundled basis for character " + chi.name());
  }
}

std::size_t bundled_cusp_dimension(const DirichletChar& chi) {
  switch (chi.discriminant()) {
    case -3: case -4: return 4;
    case -8: case -24: return 6;
    default: throw std::invalid_argument("no bundled basis for character " + chi.name());
  }
}

SpaceBasis build_basis(const DirichletChar& chi) {
  const DirichletChar one(1);
  SpaceBasis b;
  b.character = chi;
  auto twin_family = [&](const std::vector<std::int64_t>& scales) {
    for (auto t : scales) b.eisenstein_part.emplace_back(chi, one, t);
    for (auto t : scales) b.eisenstein_part.emplace_back(one, chi, t);
  };
  auto eta = [&](std::vector<std::int64_t> r) { b.cusp_part.emplace_back(24, std::move(r)); };
  switch (chi.discriminant()) {
    case -3:
      twin_family({1, 2, 4, 8});
      eta({0, 3, 0, -4, -5, 2, 16, -6});
      eta({1, -1, -3, 1, 7, 0, 1, 0});
      eta({0, 2, 0, -1, -2, 0, 7, 0});
      eta({0, 1, 0, 2, 1, -2, -2, 6});
      break;
    case -4:
      twin_family({1, 2, 3, 6});
      eta({1, -1, -3, 0, 7, 2, 2, -2});
      eta({0, 2, 0, -2, -2, 2, 8, -2});
      eta({0, 0, 0, 4, 0, -2, 2, 2});
      // The "0-1" entry reads as 0,-1: the only choice giving weight 3.
      eta({0, 1, 0, 1, 1, 0, -1, 4});
      break;
    case -8:
      twin_family({1, 3});
      eta({2, -2, -4, -2, 7, 2, 7, -4});
      eta({1, 1, -1, -4, -2, 2, 13, -4});
      eta({2, -3, -4, 1, 10, 0, -2, 2});
      eta({1, 0, -1, -1, 1, 0, 4, 2});
      eta({0, 1, 2, 0, -2, -1, 1, 5});
      eta({1, -1, -1, 2, 4, -2, -5, 8});
      break;
    case -24:
      b.eisenstein_part.emplace_back(chi, one, 1);
      b.eisenstein_part.emplace_back(one, chi, 1);
      b.eisenstein_part.emplace_back(DirichletChar(-3), DirichletChar(8), 1);
      b.eisenstein_part.emplace_back(DirichletChar(8), DirichletChar(-3), 1);
      eta({1, 1, -1, -5, -2, 4, 14, -6});
      eta({2, -3, -4, 0, 10, 2, -1, 0});
      eta({1, 0, -1, -2, 1, 2, 5, 0});
      eta({1, -2, -1, 4, 3, -2, -1, 4});
      eta({1, -1, -1, 1, 4, 0, -4, 6});
      eta({-1, 4, 1, 0, -1, -2, -3, 8});
      break;
    default:
      throw std::invalid_argument("no bundled basis for character " + chi.name());
  }
  return b;
}

std::vector<std::string> basis_names(const SpaceBasis& basis) {
  std::vector<std::string> out;
  for (const auto& e : basis.eisenstein_part) out.push_back(e.to_string());
  for (const auto& f : basis.cusp_part) out.push_back(f.to_string());
  return out;
}

std::vector<QSeries<Rational>> ExpandedBasis::all() const {
  auto out = eisenstein;
  out.insert(out.end(), cusp.begin(), cusp.end());
  return out;
}

ExpandedBasis expand_basis(const SpaceBasis& basis, std::int64_t q_precision) {
  ExpandedBasis e;
  e.basis = basis;
  e.q_precision = q_precision;
  for (const auto& spec : basis.eisenstein_part) e.eisenstein.push_back(eisenstein3(spec, q_precision));
  for (const auto& f : basis.cusp_part) e.cusp.push_back(eta_quotient_expansion(f, kGrade * q_precision));
  return e;
}

std::shared_ptr<const ExpandedBasis> cached_basis(const DirichletChar& chi, std::int64_t q_precision) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ExpandedBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[chi.discriminant()];
  if (!slot || slot->q_precision < q_precision) {
    // Grow geometrically so callers walking n upward do not rebuild every step.
    const std::int64_t target = slot ? std::max(q_precision, 2 * slot->q_precision) : q_precision;
    slot = std::make_shared<const ExpandedBasis>(expand_basis(build_basis(chi), target));
  }
  return slot;
}

bool BasisReport::ok() const {
  for (const auto& c : cusp_checks) {
    if (!c.ok) return false;
  }
  return distinct_valuations && rank == size && size == expected_dimension;
}

BasisReport verify_basis(const SpaceBasis& basis, std::int64_t q_precision) {
  if (q_precision <= basis.sturm_bound) throw std::invalid_argument("verify_basis: precision below the Sturm bound");
  BasisReport rep;
  rep.expected_dimension = bundled_dimension(basis.character);
  rep.size = basis.size();
  std::set<std::int64_t> valuations;
  for (const auto& f : basis.cusp_part) {
    CuspElementCheck check;
    check.name = f.to_string();
    check.report = ligozat_check(f);
    check.ok = check.report.is_cusp && check.report.weight == Rational(3) &&
               check.report.character_discriminant == basis.character.discriminant();
    rep.cusp_checks.push_back(std::move(check));
    valuations.insert(f.valuation24());
  }
  rep.distinct_valuations = valuations.size() == basis.cusp_part.size();
  const auto expanded = expand_basis(basis, q_precision);
  rep.rank = rank(coefficient_matrix<Rational>(expanded.all(), q_precision));
  return rep;
}

}  // namespace qformlab
