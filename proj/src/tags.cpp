#include "essurf/tags.hpp"

namespace essurf {

namespace {

// Component index per boundary face slot.
std::map<std::pair<int, int>, int> boundary_components_of(const Triangulation& t) {
    auto [surf, tris] = t.boundary_surface();
    std::vector<std::vector<int>> maps;
    surf.split_components(&maps);
    std::map<std::pair<int, int>, int> comp;
    for (size_t c = 0; c < maps.size(); ++c)
        for (int tri : maps[c]) comp[tris[tri]] = static_cast<int>(c);
    return comp;
}

}  // namespace

std::optional<FaceTagMap> transfer_tags(const Triangulation& result, const std::map<std::pair<int, int>, std::pair<int, int>>& provenance, const FaceTagMap& old_tags) {
    FaceTagMap tags;
    auto comp = boundary_components_of(result);
    std::map<int, int> comp_tag;
    // First pass: faces with provenance.
    for (const auto& [slot, c] : comp) {
        auto pit = provenance.find(slot);
        if (pit == provenance.end()) continue;
        auto tit = old_tags.find(pit->second);
        if (tit == old_tags.end()) return std::nullopt;
        auto [it, fresh] = comp_tag.emplace(c, tit->second);
        if (!fresh && it->second != tit->second) return std::nullopt;  // components merged
        tags[slot] = tit->second;
    }
    // Second pass: inherit per component.
    for (const auto& [slot, c] : comp) {
        if (tags.count(slot)) continue;
        auto it = comp_tag.find(c);
        if (it == comp_tag.end()) return std::nullopt;  // untagged new boundary
        tags[slot] = it->second;
    }
    return tags;
}

std::optional<std::map<int, int>> component_tags(const Triangulation& t, const FaceTagMap& tags) {
    auto comp = boundary_components_of(t);
    std::map<int, int> out;
    for (const auto& [slot, c] : comp) {
        auto tit = tags.find(slot);
        if (tit == tags.end()) return std::nullopt;
        auto [it, fresh] = out.emplace(c, tit->second);
        if (!fresh && it->second != tit->second) return std::nullopt;
    }
    return out;
}

}  // namespace essurf
