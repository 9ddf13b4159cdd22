#include "orbitdual/duality.hpp"

#include "orbitdual/error.hpp"

namespace orbitdual {
namespace {

void require(bool ok, std::string_view map, const Partition& d, std::string_view domain)
{
    if (!ok)
        throw DomainError(ErrorKind::DomainViolation,
                          std::string(map) + ": " + d.to_string() + " is not in " + std::string(domain));
}

} // namespace

Partition f_BC(const Partition& d, bool checked)
{
    if (checked) require(d.size() % 2 == 1 && is_special_class(d, 0, 1), "f_BC", d, "P_B^sp");
    return collapse(d_minus(d), Family::C);
}

Partition f_CB(const Partition& d, bool checked)
{
    if (checked) require(d.size() % 2 == 0 && is_special_class(d, 1, 0), "f_CB", d, "P_C^sp");
    return collapse(d_plus(d), Family::B);
}

Partition f_DC(const Partition& d, bool checked)
{
    if (checked) require(d.size() % 2 == 0 && is_special_class(d, 0, 0), "f_DC", d, "P_D^sp");
    return collapse(d_minus(d_plus(d)), Family::C);
}

Partition f_CD(const Partition& d, bool checked)
{
    if (checked) require(d.size() % 2 == 0 && is_special_class(d, 1, 1), "f_CD", d, "P_C^ms");
    return collapse(d, Family::D);
}

bool is_special_for(const Partition& d, Family x)
{
    switch (x) {
    case Family::A: return true;
    case Family::B: return d.size() % 2 == 1 && is_special_class(d, 0, 1);
    case Family::C: return d.size() % 2 == 0 && is_special_class(d, 1, 0);
    case Family::D: return d.size() % 2 == 0 && is_special_class(d, 0, 0);
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, std::string("no partition duality for family ") + family_letter(x));
}

Partition d_LS(const Partition& d, Family x, bool checked)
{
    if (x == Family::A) return transpose(d);
    if (checked) require(is_special_for(d, x), "d_LS", d, std::string("the special ") + family_letter(x) + "-partitions");
    return collapse(transpose(d), x);
}

Partition d_BV(const Partition& d, Family x, bool checked)
{
    switch (x) {
    case Family::A: return transpose(d);
    case Family::B: return f_BC(d_LS(d, x, checked), checked);
    case Family::C: return f_CB(d_LS(d, x, checked), checked);
    case Family::D: return f_DC(d_LS(d, x, checked), checked);
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, std::string("no partition duality for family ") + family_letter(x));
}

DualityMap parse_duality_map(std::string_view name)
{
    if (name == "f-bc") return DualityMap::FBC;
    if (name == "f-cb") return DualityMap::FCB;
    if (name == "f-dc") return DualityMap::FDC;
    if (name == "f-cd") return DualityMap::FCD;
    if (name == "ls") return DualityMap::LS;
    if (name == "bv") return DualityMap::BV;
    throw DomainError(ErrorKind::DomainViolation, "unknown duality map '" + std::string(name) + "'");
}

std::string_view to_string(DualityMap m)
{
    switch (m) {
    case DualityMap::FBC: return "f-bc";
    case DualityMap::FCB: return "f-cb";
    case DualityMap::FDC: return "f-dc";
    case DualityMap::FCD: return "f-cd";
    case DualityMap::LS: return "ls";
    case DualityMap::BV: return "bv";
    }
    return "?";
}

} // namespace orbitdual
