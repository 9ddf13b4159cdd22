#pragma once

#include <string>
#include <string_view>

namespace orbitdual {

/// Cartan-Killing series. A-D double as factor families inside pseudo-Levi
/// subalgebras, where A stands for a gl block.
enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(std::string_view s);

[[nodiscard]] constexpr bool is_classical(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::D; }

/// Simple type tag with rank, e.g. D10 or E8.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    /// Parses "B3", "E8", "G2". Throws DomainError(InvalidType) on bad input.
    static LieType parse(std::string_view text);

    [[nodiscard]] bool classical() const { return is_classical(family); }
    [[nodiscard]] bool exceptional() const { return !classical(); }

    /// Length of coordinate vectors: n+1 for A_n (gl coordinates), rank otherwise.
    [[nodiscard]] int coordinate_dim() const { return family == Family::A ? rank + 1 : rank; }

    /// Langlands dual type (B <-> C, everything else self-dual at the level of types).
    [[nodiscard]] LieType dual() const;

    /// Size N of the standard representation (gl(N), so(N), sp(N)); classical only.
    [[nodiscard]] int standard_dim() const;

    [[nodiscard]] std::string name() const;

    friend bool operator==(const LieType&, const LieType&) = default;
};

} // namespace orbitdual
