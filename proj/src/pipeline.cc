#include "automin/pipeline.hh"

namespace automin {

MapKind classify(const std::vector<std::optional<State>>& image, std::size_t target_size) {
    std::vector<bool> hit(target_size, false);
    bool injective = true;
    for (const auto& t : image) {
        if (!t) continue;
        if (hit[*t]) injective = false;
        hit[*t] = true;
    }
    bool surjective = true;
    for (bool h : hit) surjective = surjective && h;
    return make_kind(surjective, injective);
}

} // namespace automin
