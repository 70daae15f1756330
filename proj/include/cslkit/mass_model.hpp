#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"

namespace cslkit {

/// Homogeneous mass distributions for the collapse-noise integral.
/// A model is a flat list of rigid bodies (sphere or box), each with an
/// offset of its center from the common origin and a density weight in
/// [0, 1]. Nested composites flatten on construction: offsets add,
/// weights multiply, so the physics (a weighted density sum) is preserved.
class MassModel {
public:
    struct Sphere {
        double radius;   // m
        double density;  // kg/m^3
    };
    struct Cuboid {
        std::array<double, 3> dims;  // m, edge lengths
        double density;              // kg/m^3
    };
    using Shape = std::variant<Sphere, Cuboid>;

    struct Body {
        Shape shape;
        std::array<double, 3> offset;  // m, center position
        double weight;                 // in [0, 1]
    };

    static MassModel sphere(double radius, double density) {
        require(radius > 0, "MassModel: sphere radius must be > 0");
        require(density > 0, "MassModel: density must be > 0");
        MassModel m;
        m.bodies_.push_back({Sphere{radius, density}, {0, 0, 0}, 1.0});
        return m;
    }

    static MassModel cuboid(double lx, double ly, double lz, double density) {
        require(lx > 0 && ly > 0 && lz > 0, "MassModel: cuboid dims must be > 0");
        require(density > 0, "MassModel: density must be > 0");
        MassModel m;
        m.bodies_.push_back({Cuboid{{lx, ly, lz}, density}, {0, 0, 0}, 1.0});
        return m;
    }

    struct Part {
        MassModel model;
        std::array<double, 3> offset{0, 0, 0};
        double weight = 1.0;
    };

    static MassModel composite(const std::vector<Part>& parts) {
        require(!parts.empty(), "MassModel: composite needs at least one part");
        MassModel m;
        for (const auto& p : parts) {
            require(p.weight >= 0.0 && p.weight <= 1.0,
                    "MassModel: composite weight must be in [0, 1]");
            for (const auto& b : p.model.bodies_) {
                Body nb = b;
                for (int i = 0; i < 3; ++i) nb.offset[i] += p.offset[i];
                nb.weight *= p.weight;
                m.bodies_.push_back(nb);
            }
        }
        require(m.total_mass() > 0, "MassModel: total mass must be positive");
        return m;
    }

    const std::vector<Body>& bodies() const { return bodies_; }

    static double shape_volume(const Shape& s) {
        if (std::holds_alternative<Sphere>(s)) {
            const auto& sp = std::get<Sphere>(s);
            return (4.0 / 3.0) * kPi * sp.radius * sp.radius * sp.radius;
        }
        const auto& cb = std::get<Cuboid>(s);
        return cb.dims[0] * cb.dims[1] * cb.dims[2];
    }

    static double shape_mass(const Shape& s) {
        const double rho = std::holds_alternative<Sphere>(s)
                               ? std::get<Sphere>(s).density
                               : std::get<Cuboid>(s).density;
        return rho * shape_volume(s);
    }

    /// Sum over bodies of weight * rho * volume.
    double total_mass() const {
        double m = 0.0;
        for (const auto& b : bodies_) m += b.weight * shape_mass(b.shape);
        return m;
    }

    /// Short human-readable tag used in curve provenance.
    std::string describe() const {
        std::string s;
        for (const auto& b : bodies_) {
            if (!s.empty()) s += "+";
            if (std::holds_alternative<Sphere>(b.shape)) {
                s += "sphere(R=" + std::to_string(std::get<Sphere>(b.shape).radius) + ")";
            } else {
                const auto& d = std::get<Cuboid>(b.shape).dims;
                s += "cuboid(" + std::to_string(d[0]) + "x" + std::to_string(d[1]) +
                     "x" + std::to_string(d[2]) + ")";
            }
            if (b.weight != 1.0) s += "*w" + std::to_string(b.weight);
        }
        return s;
    }

private:
    MassModel() = default;
    std::vector<Body> bodies_;
};

} // namespace cslkit
