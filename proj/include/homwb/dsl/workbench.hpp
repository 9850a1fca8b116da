#pragma once

#include "homwb/diagram.hpp"
#include "homwb/dsl/report.hpp"
#include "homwb/dsl/spec.hpp"
#include "homwb/logic/axioms.hpp"
#include "homwb/model.hpp"
#include "homwb/niveau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace homwb::dsl {

/// Applies declarations to a DiagramBuilder in order and keeps the settings
/// (coefficients, window, flavors) the statements carry.
class SpecBuilder {
public:
    /// Throws InputError for unresolved names and invalid objects.
    void apply(const Statement& s);

    const PairDiagram& diagram() const { return builder_.diagram(); }
    bool has_complex(const std::string& name) const { return diagram().has_complex(name); }
    bool has_edge(const std::string& name) const { return diagram().find_edge(name).has_value(); }
    std::optional<std::size_t> triple(const std::string& name) const;
    std::optional<std::size_t> square(const std::string& name) const;
    bool has_filtration(const std::string& name) const { return filtrations_.count(name) > 0; }

    /// A declared filtration, or the skeletal one of `base` (registered on first use).
    FiltrationRef filtration(const std::string& name, const std::string& base);

    const std::optional<long>& modulus() const { return modulus_; }
    const std::optional<DegreeWindow>& window() const { return window_; }
    const std::optional<logic::Flavors>& flavors() const { return flavors_; }

private:
    DiagramBuilder builder_;
    std::map<std::string, FiltrationRef> filtrations_;
    std::optional<long> modulus_;
    std::optional<DegreeWindow> window_;
    std::optional<logic::Flavors> flavors_;

    std::size_t node(const std::string& total, const std::string& sub);
    std::size_t edge(const std::string& name) const;
    VertexMap vertex_map(const std::string& source, const Assignments& a) const;
};

/// Command-line overrides; they win over statements in the file.
struct RunOptions {
    std::optional<long> modulus;
    std::optional<DegreeWindow> window;
    std::optional<logic::Flavors> flavors;
    std::optional<std::uint64_t> seed;  ///< echoed in the report
    bool timing = false;
};

/// Runs the spec's command. Precondition failures give exit code 2 with the
/// message as a note; they are not thrown.
Report run(const WorkbenchSpec& spec, const std::string& source_text, const RunOptions& options = {});

/// "Z", "Z/4" or "Zmod4"; 0 stands for Z. Throws InputError otherwise.
long parse_coefficient(const std::string& text);
std::string coefficient_text(long modulus);
/// "a..b" with optional signs.
DegreeWindow parse_window(const std::string& text);

} // namespace homwb::dsl
