#include "irpoly/canonical.hpp"

#include <cstdio>

namespace irpoly {

namespace {

// One breadth-first sweep.  Vertices are relabeled in discovery order;
// each vertex emits its neighbor labels (1-based) walking its rotation in
// direction `dir` starting from the discovery edge (the chosen start edge
// for the root), then a 0 terminator.  The byte string determines the
// rotation system up to relabeling, so the minimum over all starts is a
// complete invariant.  `wide` switches to 2-byte big-endian values so graphs
// beyond 255 vertices still get codes.
//
// Compares against `best` while emitting; returns false (abandoning the
// sweep) as soon as the candidate is strictly worse.
bool sweep(const PlanarGraph& g, int root, int start_pos, int dir, bool wide,
           std::vector<std::uint8_t>& best, std::vector<std::uint8_t>& scratch,
           std::vector<int>& label, std::vector<int>& entry, std::vector<int>& order) {
    const int n = g.vertex_count();
    scratch.clear();
    label.assign(n, -1);
    order.clear();

    bool strictly_better = best.empty();
    auto push = [&](std::uint8_t b) {
        scratch.push_back(b);
        if (!strictly_better) {
            const std::size_t i = scratch.size() - 1;
            if (b < best[i])
                strictly_better = true;
            else if (b > best[i])
                return false;
        }
        return true;
    };
    auto emit = [&](int value) {
        if (wide) {
            if (!push(static_cast<std::uint8_t>(value >> 8))) return false;
            return push(static_cast<std::uint8_t>(value & 0xff));
        }
        return push(static_cast<std::uint8_t>(value));
    };

    // wide codes get a 0x00 marker so they can never collide with a narrow
    // code (a vertex count is never 0)
    if (wide && !push(0)) return false;
    if (!emit(n)) return false;
    label[root] = 0;
    order.push_back(root);
    entry[root] = start_pos;
    int next = 1;

    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        const int u = order[qi];
        const auto& r = g.neighbors(u);
        const int deg = static_cast<int>(r.size());
        const int s = entry[u];
        for (int t = 0; t < deg; ++t) {
            const int k = ((s + dir * t) % deg + deg) % deg;
            const int w = r[k];
            if (label[w] < 0) {
                label[w] = next++;
                entry[w] = g.position(w, u);
                order.push_back(w);
            }
            if (!emit(label[w] + 1)) return false;
        }
        if (!emit(0)) return false;
    }
    // equal candidates are not improvements
    return strictly_better;
}

} // namespace

std::string CanonicalCode::hex() const {
    std::string s;
    s.reserve(bytes_.size() * 2);
    static const char* digits = "0123456789abcdef";
    for (std::uint8_t b : bytes_) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw FormatError("odd hex string length", s.size());
    auto nibble = [&](char c, std::size_t at) -> std::uint8_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
        throw FormatError("invalid hex digit", at);
    };
    std::vector<std::uint8_t> bytes(s.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<std::uint8_t>((nibble(s[2 * i], 2 * i) << 4) |
                                             nibble(s[2 * i + 1], 2 * i + 1));
    return CanonicalCode(std::move(bytes));
}

CanonicalCode canonical_code(const PlanarGraph& g) {
    const int n = g.vertex_count();
    const bool wide = n > 255;
    std::vector<std::uint8_t> best, scratch;
    std::vector<int> label, entry(n, 0), order;
    order.reserve(n);

    for (int root = 0; root < n; ++root)
        for (int p = 0; p < g.degree(root); ++p)
            for (int dir : {+1, -1})
                if (sweep(g, root, p, dir, wide, best, scratch, label, entry, order))
                    best = scratch;
    return CanonicalCode(std::move(best));
}

} // namespace irpoly
