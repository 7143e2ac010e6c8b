#include "liecoh/json_io.hpp"

#include <sstream>

namespace liecoh {

json weight_json(const Weight& w) {
    return json(w);
}

json character_json(const FormalCharacter& f) {
    json arr = json::array();
    for (const auto& [w, m] : f.terms())
        arr.push_back(json{{"weight", w}, {"mult", m}});
    return arr;
}

FormalCharacter character_from_json(const json& j, int rank) {
    if (!j.is_array())
        throw std::invalid_argument("character JSON must be an array of {weight, mult}");
    FormalCharacter f;
    for (const auto& entry : j) {
        std::vector<int> w = entry.at("weight").get<std::vector<int>>();
        if (static_cast<int>(w.size()) != rank)
            throw std::invalid_argument("character weight has wrong length");
        f.add(w, entry.at("mult").get<long long>());
    }
    return f;
}

namespace {

json degrees_json(const std::map<int, FormalCharacter>& degrees) {
    json obj = json::object();
    for (const auto& [d, f] : degrees)
        if (!f.empty())
            obj[std::to_string(d)] = character_json(f);
    return obj;
}

} // namespace

json graded_json(const GradedCharacter& g) {
    json out;
    out["degrees"] = degrees_json(g.degrees);
    if (g.exact)
        out["status"] = "exact";
    else
        out["status"] = json{{"bounds", json{{"lower", degrees_json(g.lower)},
                                             {"upper", degrees_json(g.degrees)}}}};
    out["euler"] = character_json(g.euler());
    return out;
}

json twisted_report_json(const TwistedReport& r) {
    json out;
    if (r.aut0 == Aut0Kind::ExactlyG)
        out["aut0"] = "G";
    else
        out["aut0"] = json{{"inconclusive", json{{"kernel_character", character_json(r.kernel_character)}}}};
    if (r.h1_determined())
        out["h1"] = graded_json(*r.h1_twisted);
    else
        out["h1"] = json{{"not_determined", r.h1_reason}};
    out["citations"] = r.citations;
    out["notes"] = r.notes;
    out["lie_aut0"] = json{{"character", character_json(r.lie_aut0_character)},
                           {"dimension", r.lie_aut0_character.dimension()}};
    return out;
}

json string_decomposition_json(const StringDecomposition& d) {
    json arr = json::array();
    for (const AlphaString& s : d.strings)
        arr.push_back(json{{"top", s.top}, {"size", s.size}, {"alpha", s.alpha + 1}, {"twist", s.twist}});
    return json{{"strings", arr}, {"ambiguous", d.ambiguous}, {"note", d.note}};
}

std::vector<int> subset_to_1based(const std::set<int>& j) {
    std::vector<int> out;
    for (int i : j)
        out.push_back(i + 1);
    return out;
}

std::string dump_canonical(const json& j) {
    return j.dump();
}

} // namespace liecoh
