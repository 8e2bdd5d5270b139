#include "doubler/tower.hpp"

#include <algorithm>

#include "doubler/error.hpp"

namespace doubler {

std::string_view kind_tag(DoublingKind kind) noexcept {
  return kind == DoublingKind::CayleyDickson ? "cd" : "cs";
}

namespace {

void validate_level(const LevelSpec& level, std::size_t j) {
  if (level.kind == DoublingKind::ConwaySmith && level.d.sign() >= 0) {
    throw Error(ErrorCode::InvalidCsParameter,
                "Conway-Smith level " + std::to_string(j) +
                    " needs a negative parameter, got " + level.d.to_string());
  }
}

}  // namespace

TowerSpec::TowerSpec(std::vector<LevelSpec> levels) : levels_(std::move(levels)) {
  for (std::size_t j = 0; j < levels_.size(); ++j) validate_level(levels_[j], j + 1);
}

TowerSpec TowerSpec::parse(std::string_view text) {
  std::vector<LevelSpec> levels;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError(0, "empty tower");
  while (true) {
    LevelSpec level;
    const std::string_view rest = text.substr(pos);
    if (rest.starts_with("cd:")) {
      level.kind = DoublingKind::CayleyDickson;
    } else if (rest.starts_with("cs:")) {
      level.kind = DoublingKind::ConwaySmith;
    } else {
      throw ParseError(pos, "expected 'cd:' or 'cs:'");
    }
    pos += 3;
    const std::size_t end = std::min(text.find(',', pos), text.size());
    try {
      level.d = Rational::parse(text.substr(pos, end - pos));
    } catch (const ParseError& e) {
      throw ParseError(pos + e.position(), "malformed level parameter");
    }
    levels.push_back(level);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return TowerSpec(std::move(levels));
}

TowerSpec TowerSpec::uniform(DoublingKind kind, const Rational& d, std::size_t depth) {
  return TowerSpec(std::vector<LevelSpec>(depth, LevelSpec{kind, d}));
}

const LevelSpec& TowerSpec::level(std::size_t j) const {
  if (j < 1 || j > levels_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(j) + " out of range");
  }
  return levels_[j - 1];
}

Rational TowerSpec::c(std::size_t j) const { return -level(j).d; }

TowerSpec TowerSpec::prefix(std::size_t depth) const {
  if (depth > levels_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "prefix longer than tower");
  }
  TowerSpec out;
  out.levels_.assign(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(depth));
  return out;
}

bool TowerSpec::homogeneous(DoublingKind kind) const noexcept {
  return std::all_of(levels_.begin(), levels_.end(),
                     [kind](const LevelSpec& l) { return l.kind == kind; });
}

bool TowerSpec::all_negative() const noexcept {
  return std::all_of(levels_.begin(), levels_.end(),
                     [](const LevelSpec& l) { return l.d.sign() < 0; });
}

bool TowerSpec::left_alternative_guaranteed() const noexcept {
  if (homogeneous(DoublingKind::ConwaySmith)) return true;
  return homogeneous(DoublingKind::CayleyDickson) && depth() <= 3;
}

std::string TowerSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (j > 0) out += ',';
    out += kind_tag(levels_[j].kind);
    out += ':';
    out += levels_[j].d.to_string();
  }
  return out;
}

MultiIndex::MultiIndex(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw Error(ErrorCode::IndexOutOfRange, "multi-index entries must be 0 or 1");
  }
}

MultiIndex MultiIndex::at_position(std::size_t i, std::size_t n) {
  if (n >= 8 * sizeof(std::size_t) || i < 1 || i > (std::size_t{1} << n)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "multi-index position " + std::to_string(i) + " out of range");
  }
  std::vector<std::uint8_t> bits(n);
  for (std::size_t j = 0; j < n; ++j) bits[j] = static_cast<std::uint8_t>(((i - 1) >> j) & 1U);
  return MultiIndex(std::move(bits));
}

std::uint8_t MultiIndex::bit(std::size_t j) const {
  if (j < 1 || j > bits_.size()) throw Error(ErrorCode::IndexOutOfRange, "bit out of range");
  return bits_[j - 1];
}

std::partial_ordering operator<=>(const MultiIndex& e, const MultiIndex& f) {
  if (e.bits_.size() != f.bits_.size()) return std::partial_ordering::unordered;
  // The highest differing position decides.
  for (std::size_t j = e.bits_.size(); j-- > 0;) {
    if (e.bits_[j] != f.bits_[j]) {
      return e.bits_[j] < f.bits_[j] ? std::partial_ordering::less
                                     : std::partial_ordering::greater;
    }
  }
  return std::partial_ordering::equivalent;
}

Rational form_weight(const TowerSpec& tower, std::size_t i) {
  const MultiIndex e = MultiIndex::at_position(i, tower.depth());
  Rational w{1};
  for (std::size_t j = 1; j <= tower.depth(); ++j) {
    if (e.bit(j) != 0) w *= tower.c(j);
  }
  return w;
}

}  // namespace doubler
