#include "propdiv/game_io.hpp"

#include "propdiv/errors.hpp"

#include <map>
#include <set>
#include <vector>

namespace propdiv {

using nlohmann::json;
using nlohmann::ordered_json;

static std::string coalition_key(const Game& g, Coalition s) {
    std::string key;
    for (int i = 0; i < g.players(); ++i) {
        if (!s.contains(i)) continue;
        if (!key.empty()) key += '|';
        key += g.labels()[static_cast<std::size_t>(i)];
    }
    return key;
}

static Rational worth_from_json(const ordered_json& value, const std::string& key) {
    if (value.is_string())
        return Rational::parse(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(value.get<long long>());
    raise(Errc::bad_document, "worth of \"" + key + "\" must be a rational string or integer");
}

Game game_from_json(const ordered_json& doc) {
    if (!doc.is_object())
        raise(Errc::bad_document, "game document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "players" && key != "worths")
            raise(Errc::bad_document, "unexpected top-level key \"" + key + "\"");
    }
    if (!doc.contains("players") || !doc["players"].is_array())
        raise(Errc::bad_document, "missing \"players\" array");
    if (!doc.contains("worths") || !doc["worths"].is_object())
        raise(Errc::bad_document, "missing \"worths\" object");

    std::vector<std::string> labels;
    for (const auto& p : doc["players"]) {
        if (!p.is_string())
            raise(Errc::bad_document, "player labels must be strings");
        labels.push_back(p.get<std::string>());
    }
    const int n = static_cast<int>(labels.size());
    if (n < 2 || n > k_max_players)
        raise(Errc::player_count, "player count must be in [2, 16], got " + std::to_string(n));
    {
        std::set<std::string> uniq(labels.begin(), labels.end());
        if (uniq.size() != labels.size())
            raise(Errc::bad_document, "player labels must be distinct");
    }

    Game g(n, labels);
    const std::uint32_t full = g.grand().bits();

    std::map<std::string, std::uint32_t> key_of;
    for (std::uint32_t m = 1; m <= full; ++m)
        key_of[coalition_key(g, Coalition(m))] = m;

    std::set<std::uint32_t> seen;
    for (const auto& [key, value] : doc["worths"].items()) {
        auto it = key_of.find(key);
        if (it == key_of.end())
            raise(Errc::bad_document, "unknown coalition key \"" + key + "\"");
        if (!seen.insert(it->second).second)
            raise(Errc::duplicate_key, "coalition \"" + key + "\" appears twice");
        g.set_worth(Coalition(it->second), worth_from_json(value, key));
    }
    if (seen.size() != full) {
        for (std::uint32_t m = 1; m <= full; ++m)
            if (!seen.count(m))
                raise(Errc::missing_coalition,
                      "missing worth for coalition \"" + coalition_key(g, Coalition(m)) + "\"");
    }
    return g;
}

ordered_json game_to_json(const Game& g) {
    ordered_json doc;
    doc["players"] = g.labels();
    ordered_json worths = ordered_json::object();
    for (std::uint32_t m = 1; m <= g.grand().bits(); ++m)
        worths[coalition_key(g, Coalition(m))] = g.worth(Coalition(m)).str();
    doc["worths"] = std::move(worths);
    return doc;
}

// nlohmann keeps the last of duplicate object keys, so the document walk
// below is the only place duplicates are still visible.
static void reject_duplicate_keys(const std::string& text) {
    std::vector<std::set<std::string>> stack;
    json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start:
            stack.emplace_back();
            break;
        case json::parse_event_t::object_end:
            stack.pop_back();
            break;
        case json::parse_event_t::key:
            if (!stack.back().insert(parsed.get<std::string>()).second)
                raise(Errc::duplicate_key,
                      "duplicate key \"" + parsed.get<std::string>() + "\" in document");
            break;
        default:
            break;
        }
        return true;
    };
    auto parsed = json::parse(text, cb);
    (void)parsed;
}

Game parse_game(const std::string& text) {
    ordered_json doc;
    try {
        reject_duplicate_keys(text);
        doc = ordered_json::parse(text);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        raise(Errc::bad_document, e.what());
    }
    return game_from_json(doc);
}

std::string serialize_game(const Game& g) {
    return game_to_json(g).dump(2) + "\n";
}

} // namespace propdiv
