#pragma once

#include <string>

#include <json.hpp>

#include "cliffgen/representation.hpp"

namespace cliffgen {

namespace detail {

inline nlohmann::json entry_json(const RingScalar& s) {
    switch (s.ring()) {
        case Ring::real:
            return s.real().str();
        case Ring::complex:
            return nlohmann::json::array({s.complex().re.str(), s.complex().im.str()});
        case Ring::quaternion: {
            const auto& q = s.quaternion();
            return nlohmann::json::array({q.a.str(), q.b.str(), q.c.str(), q.d.str()});
        }
    }
    return nullptr;
}

inline nlohmann::json matrix_json(const RingMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.dim; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.dim; ++c)
            row.push_back(entry_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string signed_blade_name(const SignedBlade& sb) {
    return (sb.sign < 0 ? "-" : "") + sb.blade.name();
}

}  // namespace detail

/// Stable versioned JSON form of a representation ("cliffgen/1").
inline nlohmann::json to_json(const Representation& rep) {
    nlohmann::json j;
    j["schema"] = "cliffgen/1";
    j["signature"] = {rep.sig.p, rep.sig.q};
    j["ring"] = ring_kind_name(rep.cls.ring);
    j["dim"] = rep.cls.matrix_dim;
    j["k"] = int(rep.basis.idem.source.members.size());
    nlohmann::json gens = nlohmann::json::array();
    for (Blade g : rep.basis.idem.source.members)
        gens.push_back(g.name());
    j["generating_set"] = std::move(gens);
    j["idempotent"] = rep.basis.f().str();
    nlohmann::json basis = nlohmann::json::array();
    for (Blade b : rep.basis.module_blades)
        basis.push_back(b.name());
    j["basis"] = std::move(basis);
    nlohmann::json units = nlohmann::json::object();
    static constexpr const char* unit_names[3] = {"i", "j", "k"};
    for (std::size_t t = 0; t < rep.basis.unit_labels.size(); ++t)
        units[unit_names[t]] = detail::signed_blade_name(rep.basis.unit_labels[t]);
    j["scalar_units"] = std::move(units);
    nlohmann::json generators = nlohmann::json::array();
    for (int i = 0; i < rep.sig.n(); ++i) {
        nlohmann::json g;
        g["index"] = i + 1;
        g["matrix"] = detail::matrix_json(rep.generators[i]);
        if (rep.semisimple())
            g["matrix_hat"] = detail::matrix_json(rep.generators_hat[i]);
        generators.push_back(std::move(g));
    }
    j["generators"] = std::move(generators);
    if (!rep.basis.notes.empty())
        j["notes"] = rep.basis.notes;
    return j;
}

/// Plain-text report of a representation.
inline std::string to_text(const Representation& rep) {
    std::string out;
    out += "Cl" + rep.sig.str() + "  ring " + ring_kind_name(rep.cls.ring) + "  dim " +
           std::to_string(rep.cls.matrix_dim) + "  k " +
           std::to_string(rep.basis.idem.source.members.size()) +
           (rep.semisimple() ? "  (semisimple pair)" : "") + "\n";
    out += "generating set:";
    for (Blade g : rep.basis.idem.source.members)
        out += " " + g.name();
    out += "\nidempotent: " + rep.basis.f().str() + "\n";
    out += "module basis:";
    for (Blade b : rep.basis.module_blades)
        out += " " + b.name() + "F";
    out += "\n";
    if (!rep.basis.unit_labels.empty()) {
        static constexpr const char* unit_names[3] = {"i", "j", "k"};
        out += "scalar units:";
        for (std::size_t t = 0; t < rep.basis.unit_labels.size(); ++t)
            out += std::string(" ") + unit_names[t] + "=" +
                   detail::signed_blade_name(rep.basis.unit_labels[t]) + "F";
        out += "\n";
    }
    for (int i = 0; i < rep.sig.n(); ++i) {
        out += "g" + std::to_string(i + 1) + ":\n";
        const RingMatrix& m = rep.generators[i];
        for (int r = 0; r < m.dim; ++r) {
            out += "  [";
            for (int c = 0; c < m.dim; ++c)
                out += (c ? " " : "") + m.at(r, c).str();
            out += "]\n";
        }
    }
    if (rep.semisimple())
        out += "hat half: negate every matrix above\n";
    for (const std::string& note : rep.basis.notes)
        out += "note: " + note + "\n";
    return out;
}

/// LaTeX emitter mirroring the bracketed array layout.
inline std::string to_latex(const Representation& rep) {
    std::string out;
    for (int i = 0; i < rep.sig.n(); ++i) {
        const RingMatrix& m = rep.generators[i];
        out += "$$\\gamma_{" + std::to_string(i + 1) +
               "} \\leftrightarrow \\left[\\begin{array}{" + std::string(m.dim, 'c') + "} ";
        for (int r = 0; r < m.dim; ++r) {
            for (int c = 0; c < m.dim; ++c) {
                out += m.at(r, c).str();
                if (c + 1 < m.dim)
                    out += " & ";
            }
            if (r + 1 < m.dim)
                out += " \\\\ ";
        }
        out += " \\end{array}\\right]$$\n";
    }
    return out;
}

}  // namespace cliffgen
