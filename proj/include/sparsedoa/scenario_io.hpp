// SPDX-License-Identifier: Apache-2.0
//
// sparsedoa: complex-valued sparse recovery for single-snapshot beamforming
// Copyright (C) 2026 The sparsedoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#ifndef SPARSEDOA_SCENARIO_IO_HPP
#define SPARSEDOA_SCENARIO_IO_HPP

#include "model.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <string>

namespace sdoa
{
    // {"label": str, "doas_deg": [..], "magnitudes": [..], "grid_spacing_deg": num, "n_sensors": int}
    inline void to_json(nlohmann::json &j, const Scenario &sc)
    {
        j = nlohmann::json{{"label", sc.label},
                           {"doas_deg", sc.doas_deg},
                           {"magnitudes", sc.magnitudes},
                           {"grid_spacing_deg", sc.grid_spacing_deg},
                           {"n_sensors", sc.n_sensors}};
    }

    inline void from_json(const nlohmann::json &j, Scenario &sc)
    {
        sc.label = j.value("label", std::string("custom"));
        j.at("doas_deg").get_to(sc.doas_deg);
        j.at("magnitudes").get_to(sc.magnitudes);
        j.at("grid_spacing_deg").get_to(sc.grid_spacing_deg);
        j.at("n_sensors").get_to(sc.n_sensors);
    }

    inline Scenario parse_scenario(const std::string &text)
    {
        Scenario sc;
        try
        {
            from_json(nlohmann::json::parse(text), sc);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("scenario JSON: ") + e.what());
        }
        sc.validate();
        return sc;
    }

    inline Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open scenario file '" + path + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return parse_scenario(text);
    }

    // "1".."7" selects a preset; anything else is read as a scenario file path.
    inline Scenario resolve_scenario(const std::string &arg)
    {
        int id = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), id);
        if (ec == std::errc() && ptr == arg.data() + arg.size())
            return preset(id);
        return load_scenario(arg);
    }

} // namespace sdoa

#endif
