#include "zfx/decompose.hpp"

#include <deque>

#include "tree_draft.hpp"
#include "zfx/errors.hpp"

namespace zfx {

GraphLabelledTree decompose(const Graph& g, const DecomposeOptions& options) {
    if (g.order() == 0 || !is_connected(g)) throw DomainError("decompose needs a nonempty connected graph");

    detail::TreeDraft draft(g.order(), g);
    std::deque<int> work{0};
    while (!work.empty()) {
        const int id = work.front();
        work.pop_front();
        const Graph& label = draft.bags[static_cast<std::size_t>(id)].label;
        if (classify_shape(label).shape != GraphShape::other) continue;
        const auto split = find_split(label, options.split);
        if (!split) continue;
        const int other = draft.split_bag(id, split->a.bits(), split->a_frontier.bits(), split->b_frontier.bits());
        work.push_back(id);
        work.push_back(other);
    }
    draft.reduce();
    return draft.freeze();
}

}  // namespace zfx
