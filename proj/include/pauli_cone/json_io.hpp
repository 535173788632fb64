// Copyright 2026 The Pauli Cone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULI_CONE_JSON_IO_HPP
#define PAULI_CONE_JSON_IO_HPP

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/symmetry.hpp"

namespace pauli_cone {

using json = nlohmann::json;

/// {"n": N, "coeffs": ["a/b", ...]}
inline json to_json(const MultiplierTensor &mu) {
    json coeffs = json::array();
    for (const auto &c : mu.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    return {{"n", mu.order()}, {"coeffs", coeffs}};
}

inline MultiplierTensor multiplier_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) {
        throw std::invalid_argument("multiplier JSON needs fields \"n\" and \"coeffs\"");
    }
    if (!j["n"].is_number_integer()) {
        throw std::invalid_argument("multiplier JSON: \"n\" must be an integer");
    }
    if (!j["coeffs"].is_array()) {
        throw std::invalid_argument("multiplier JSON: \"coeffs\" must be an array");
    }
    const int n = j["n"].get<int>();
    if (n < 1 || n > 8) {
        throw std::invalid_argument("multiplier JSON: order " + std::to_string(n) + " out of range");
    }
    RatVector coeffs;
    for (const auto &c : j["coeffs"]) {
        if (c.is_string()) {
            coeffs.push_back(parse_rat(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coeffs.push_back(Rat(c.get<long>()));
        } else {
            throw std::invalid_argument("multiplier JSON: coefficients must be \"a/b\" strings or integers");
        }
    }
    return MultiplierTensor(n, std::move(coeffs));
}

namespace detail {

inline json integer_array(const RatVector &v) {
    json a = json::array();
    for (const auto &x : v) {
        if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
            throw std::invalid_argument("ray entries must be machine-size integers");
        }
        a.push_back(x.get_num().get_si());
    }
    return a;
}

}  // namespace detail

inline json to_json(const RayGenerator &r) {
    json j = {{"p", detail::integer_array(r.p())}, {"q", detail::integer_array(r.q())}};
    j["orbit"] = std::string(to_string(r.label.value_or(OrbitLabel::Other)));
    return j;
}

/// Ray list sorted by (p, q).
inline json rays_to_json(std::vector<RayGenerator> rays) {
    std::sort(rays.begin(), rays.end(), ray_less);
    json a = json::array();
    for (const auto &r : rays) {
        a.push_back(to_json(r));
    }
    return a;
}

inline std::vector<RayGenerator> rays_from_json(const json &j, int n) {
    if (!j.is_array()) {
        throw std::invalid_argument("ray JSON must be an array");
    }
    std::vector<RayGenerator> out;
    for (const auto &e : j) {
        RatVector p, q;
        for (const auto &x : e.at("p")) {
            p.push_back(Rat(x.get<long>()));
        }
        for (const auto &x : e.at("q")) {
            q.push_back(Rat(x.get<long>()));
        }
        SpectrumPair pair(n, std::move(p), std::move(q));
        RayGenerator r{pair, zero_pattern(pair), std::nullopt};
        if (e.contains("orbit")) {
            r.label = parse_orbit_label(e["orbit"].get<std::string>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline json to_json(const OrbitReport &o) {
    return {{"label", std::string(to_string(o.label))},
            {"size", o.size},
            {"representative",
             {{"p", detail::integer_array(o.representative.p())}, {"q", detail::integer_array(o.representative.q())}}}};
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_JSON_IO_HPP
