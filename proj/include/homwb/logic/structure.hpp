#pragma once

#include "homwb/group.hpp"
#include "homwb/model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace homwb::logic {

using Element = std::uint32_t;

/// Finite abelian group given by tables on the elements 0..size-1.
struct Carrier {
    std::size_t size = 1;
    std::vector<Element> plus;  ///< plus[a * size + b]
    std::vector<Element> neg;
    Element zero = 0;
    std::vector<std::string> labels;

    /// Elements of a canonical finite group in mixed-radix order.
    static Carrier of_group(const FgAbGroup& g);
    static Carrier cyclic(std::size_t m);
};

struct FunctionTable {
    std::string domain;
    std::string codomain;
    std::vector<Element> table;
};

/// Interpretation of a signature with finite carriers.
class FiniteStructure {
public:
    std::map<std::string, Carrier> sorts;
    std::map<std::string, FunctionTable> functions;

    /// Table of a hom between canonical finite groups. Carriers must come
    /// from Carrier::of_group on the same groups.
    static FunctionTable table_of(const GroupHom& h, const std::string& domain, const std::string& codomain);

    /// Problems with totality or sorting of the tables; empty when sound.
    std::vector<std::string> verify() const;
    /// Isomorphic copy: element e of sort s becomes perms.at(s)[e].
    FiniteStructure relabeled(const std::map<std::string, std::vector<Element>>& perms) const;
};

/// One carrier per sort of the generated signature, one table per symbol.
/// Throws InputError for integral coefficients.
FiniteStructure export_finite_structure(const HomologyModel& model);

} // namespace homwb::logic
