#include "orbitdual/lie_type.hpp"

#include "orbitdual/error.hpp"

#include <charconv>

namespace orbitdual {

char family_letter(Family f)
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    }
    return '?';
}

Family parse_family(std::string_view s)
{
    if (s.size() == 1) {
        switch (s[0]) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        case 'E': case 'e': return Family::E;
        case 'F': case 'f': return Family::F;
        case 'G': case 'g': return Family::G;
        default: break;
        }
    }
    throw DomainError(ErrorKind::InvalidType, "unknown family '" + std::string(s) + "'");
}

LieType LieType::parse(std::string_view text)
{
    if (text.size() < 2) throw DomainError(ErrorKind::InvalidType, "bad Lie type '" + std::string(text) + "'");
    LieType t;
    t.family = parse_family(text.substr(0, 1));
    const auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || t.rank < 1)
        throw DomainError(ErrorKind::InvalidType, "bad Lie type '" + std::string(text) + "'");

    bool ok = true;
    switch (t.family) {
    case Family::A: case Family::B: case Family::C: ok = t.rank >= 1; break;
    case Family::D: ok = t.rank >= 2; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
    }
    if (!ok) throw DomainError(ErrorKind::InvalidType, "no simple type " + std::string(text));
    return t;
}

LieType LieType::dual() const
{
    if (family == Family::B) return {Family::C, rank};
    if (family == Family::C) return {Family::B, rank};
    return *this;
}

int LieType::standard_dim() const
{
    switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C: case Family::D: return 2 * rank;
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, name() + " has no classical standard representation");
}

std::string LieType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

} // namespace orbitdual
