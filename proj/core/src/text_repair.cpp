#include "grc/text_repair.hpp"

#include <unordered_set>

#include "grc/errors.hpp"

namespace grc {

FreqTable freq_table_text(std::span<const Symbol> w) {
    FreqTable table;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] != w[i + 1]) ++table[{w[i], w[i + 1]}];
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::uint64_t d = j - i;
        if (d >= 2) table[{w[i], w[i]}] += d / 2;
        i = j;
    }
    return table;
}

std::vector<Symbol> replace_pair_text(std::span<const Symbol> w, Bigram b, Symbol fresh) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
        if (i + 1 < w.size() && w[i] == b.left && w[i + 1] == b.right) {
            out.push_back(fresh);
            i += 2;
        } else {
            out.push_back(w[i]);
            ++i;
        }
    }
    return out;
}

TextRepairResult repair_naive(std::span<const Symbol> text, std::uint32_t sigma,
                              const TextRepairOptions& opt) {
    GRC_CHECK(text.size() >= 2, "repair needs at least two symbols");
    TextRepairResult res;
    res.grammar.sigma = sigma;
    Symbol fresh = opt.first_fresh ? opt.first_fresh : sigma;

    std::vector<Symbol> w(text.begin(), text.end());
    std::uint64_t cumulative = 0;
    std::uint32_t level = 0;
    while (true) {
        FreqTable table = freq_table_text(w);
        std::optional<Bigram> sel = select_bigram(table);
        if (!sel) break;
        std::uint64_t f = table[*sel];
        std::vector<Symbol> next = replace_pair_text(w, *sel, fresh);
        GRC_CHECK(next.size() == w.size() - f, "length law violated");
        cumulative += f;
        res.stats.levels.push_back({level, *sel, f, 0, 0, w.size(), cumulative, opt.phase});
        res.grammar.pairs.emplace_back(sel->left, sel->right);
        w = std::move(next);
        ++fresh;
        ++level;
        GRC_CHECK(level < text.size(), "more levels than input symbols");
    }
    res.grammar.final_seq = std::move(w);
    res.stats.pairs = res.grammar.pairs.size();
    return res;
}

namespace {

// Doubly linked list of runs with per-bigram occurrence sets and a max
// queue. Adjacent runs always hold distinct letters, so an adjacency is
// exactly one occurrence of a non-repeating bigram and repeating mass lives
// entirely in the exponents.
class RunList {
public:
    explicit RunList(std::span<const Symbol> text) {
        std::size_t i = 0;
        std::int32_t prev = -1;
        while (i < text.size()) {
            std::size_t j = i;
            while (j < text.size() && text[j] == text[i]) ++j;
            std::int32_t id = static_cast<std::int32_t>(cells_.size());
            cells_.push_back({text[i], j - i, prev, -1, true});
            if (prev != -1) cells_[prev].next = id;
            else head_ = id;
            prev = id;
            i = j;
        }
        tail_ = prev;
        for (std::int32_t c = head_; c != -1; c = cells_[c].next) {
            add_mass(c);
            if (cells_[c].next != -1) add_adj(c, cells_[c].next);
        }
    }

    const FreqQueue& queue() const { return queue_; }

    /// Replaces every occurrence of `b` with `fresh`; returns the count.
    std::uint64_t replace(Bigram b, Symbol fresh) {
        return b.repeating() ? replace_repeating(b.left, fresh)
                             : replace_nonrepeating(b, fresh);
    }

    std::vector<Symbol> materialize() const {
        std::vector<Symbol> out;
        for (std::int32_t c = head_; c != -1; c = cells_[c].next)
            out.insert(out.end(), static_cast<std::size_t>(cells_[c].exp), cells_[c].letter);
        return out;
    }

private:
    struct Cell {
        Symbol letter;
        std::uint64_t exp;
        std::int32_t prev;
        std::int32_t next;
        bool alive;
    };

    std::uint64_t site_key(std::int32_t cell) const { return static_cast<std::uint64_t>(cell); }

    void add_adj(std::int32_t a, std::int32_t b) {
        Bigram bg{cells_[a].letter, cells_[b].letter};
        queue_.add(bg, +1);
        pair_sites_[bg].insert(a);
    }
    void remove_adj(std::int32_t a, std::int32_t b) {
        Bigram bg{cells_[a].letter, cells_[b].letter};
        queue_.add(bg, -1);
        pair_sites_[bg].erase(a);
    }
    void add_mass(std::int32_t c) {
        if (cells_[c].exp < 2) return;
        Bigram bg{cells_[c].letter, cells_[c].letter};
        queue_.add(bg, static_cast<std::int64_t>(cells_[c].exp / 2));
        run_sites_[bg].insert(c);
    }
    void remove_mass(std::int32_t c) {
        if (cells_[c].exp < 2) return;
        Bigram bg{cells_[c].letter, cells_[c].letter};
        queue_.add(bg, -static_cast<std::int64_t>(cells_[c].exp / 2));
        run_sites_[bg].erase(c);
    }

    void link(std::int32_t a, std::int32_t b) {
        if (a != -1) cells_[a].next = b;
        else head_ = b;
        if (b != -1) cells_[b].prev = a;
        else tail_ = a;
    }

    void dec_exp(std::int32_t c, std::uint64_t k) {
        GRC_CHECK(cells_[c].exp > k, "dec_exp would empty the run");
        remove_mass(c);
        cells_[c].exp -= k;
        add_mass(c);
    }

    void erase_cell(std::int32_t c) {
        std::int32_t p = cells_[c].prev;
        std::int32_t n = cells_[c].next;
        if (p != -1) remove_adj(p, c);
        if (n != -1) remove_adj(c, n);
        remove_mass(c);
        link(p, n);
        cells_[c].alive = false;
        if (p == -1 || n == -1) return;
        if (cells_[p].letter != cells_[n].letter) {
            add_adj(p, n);
            return;
        }
        // Coalesce n into p.
        std::int32_t nn = cells_[n].next;
        if (nn != -1) remove_adj(n, nn);
        remove_mass(p);
        remove_mass(n);
        cells_[p].exp += cells_[n].exp;
        link(p, nn);
        cells_[n].alive = false;
        add_mass(p);
        if (nn != -1) add_adj(p, nn);
    }

    /// Inserts a fresh single cell strictly between a and its successor.
    /// Callers guarantee the letter differs from both neighbours.
    std::int32_t insert_between(std::int32_t a, std::int32_t b, Symbol letter,
                                std::uint64_t exp) {
        if (a != -1 && b != -1) remove_adj(a, b);
        std::int32_t id = static_cast<std::int32_t>(cells_.size());
        cells_.push_back({letter, exp, a, b, true});
        if (a != -1) cells_[a].next = id;
        else head_ = id;
        if (b != -1) cells_[b].prev = id;
        else tail_ = id;
        if (a != -1) add_adj(a, id);
        if (b != -1) add_adj(id, b);
        add_mass(id);
        return id;
    }

    std::uint64_t replace_nonrepeating(Bigram b, Symbol fresh) {
        auto it = pair_sites_.find(b);
        if (it == pair_sites_.end()) return 0;
        std::vector<std::int32_t> sites(it->second.begin(), it->second.end());
        std::uint64_t count = 0;
        for (std::int32_t a : sites) {
            GRC_CHECK(cells_[a].alive && cells_[a].letter == b.left, "stale pair site");
            std::int32_t r = cells_[a].next;
            GRC_CHECK(r != -1 && cells_[r].letter == b.right, "pair site lost its partner");
            insert_between(a, r, fresh, 1);
            if (cells_[a].exp == 1) erase_cell(a);
            else dec_exp(a, 1);
            if (cells_[r].exp == 1) erase_cell(r);
            else dec_exp(r, 1);
            ++count;
        }
        return count;
    }

    std::uint64_t replace_repeating(Symbol c, Symbol fresh) {
        Bigram bg{c, c};
        auto it = run_sites_.find(bg);
        if (it == run_sites_.end()) return 0;
        std::vector<std::int32_t> sites(it->second.begin(), it->second.end());
        std::uint64_t count = 0;
        for (std::int32_t cell : sites) {
            GRC_CHECK(cells_[cell].alive && cells_[cell].letter == c, "stale run site");
            std::uint64_t d = cells_[cell].exp;
            GRC_CHECK(d >= 2, "run site with a short run");
            std::int32_t p = cells_[cell].prev;
            std::int32_t n = cells_[cell].next;
            if (p != -1) remove_adj(p, cell);
            if (n != -1) remove_adj(cell, n);
            remove_mass(cell);
            cells_[cell].letter = fresh;
            cells_[cell].exp = d / 2;
            add_mass(cell);
            if (p != -1) add_adj(p, cell);
            if (d % 2 == 1) {
                insert_between(cell, n, c, 1);  // re-adds the adjacency to n
            } else if (n != -1) {
                add_adj(cell, n);
            }
            count += d / 2;
        }
        return count;
    }

    std::vector<Cell> cells_;
    std::int32_t head_ = -1;
    std::int32_t tail_ = -1;
    FreqQueue queue_;
    std::unordered_map<Bigram, std::unordered_set<std::int32_t>, BigramHash> pair_sites_;
    std::unordered_map<Bigram, std::unordered_set<std::int32_t>, BigramHash> run_sites_;
};

}  // namespace

TextRepairResult repair_fast(std::span<const Symbol> text, std::uint32_t sigma,
                             const TextRepairOptions& opt) {
    GRC_CHECK(text.size() >= 2, "repair needs at least two symbols");
    TextRepairResult res;
    res.grammar.sigma = sigma;
    Symbol fresh = opt.first_fresh ? opt.first_fresh : sigma;

    RunList list(text);
    std::uint64_t text_len = text.size();
    std::uint64_t cumulative = 0;
    std::uint32_t level = 0;
    while (auto sel = list.queue().select()) {
        std::uint64_t f = list.queue().freq(*sel);
        std::uint64_t count = list.replace(*sel, fresh);
        GRC_CHECK(count == f, "replacement count disagrees with the queue");
        cumulative += count;
        res.stats.levels.push_back({level, *sel, count, 0, 0, text_len, cumulative, opt.phase});
        res.grammar.pairs.emplace_back(sel->left, sel->right);
        text_len -= count;
        ++fresh;
        ++level;
    }
    res.grammar.final_seq = list.materialize();
    GRC_CHECK(res.grammar.final_seq.size() == text_len, "text length drifted");
    res.stats.pairs = res.grammar.pairs.size();
    return res;
}

}  // namespace grc
