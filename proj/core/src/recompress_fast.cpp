#include "grc/recompress_fast.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "grc/errors.hpp"
#include "grc/text_repair.hpp"

namespace grc {

namespace {

constexpr std::int32_t kNone = -1;

struct Item {
    bool is_var = false;
    std::uint32_t var = 0;   // rule index when is_var
    Symbol letter = 0;       // run payload otherwise
    std::uint64_t exp = 0;
    std::int32_t prev = kNone;
    std::int32_t next = kNone;
    std::uint32_t rule = 0;
    bool alive = true;
};

struct RuleList {
    std::int32_t head = kNone;
    std::int32_t tail = kNone;
    std::uint32_t run_count = 0;     // number of run items
    std::uint64_t letter_count = 0;  // letters carried by the runs
    bool null = false;
};

struct JunctionTerm {
    Bigram bigram;
    std::uint64_t weight;
};

struct BoundarySnapshot {
    RlRun lmb{};
    RlRun rmb{};
    bool single_block = false;
    std::uint64_t length = 0;
};

}  // namespace

struct FastRecompressor::Impl {
    std::uint32_t sigma = 0;
    std::vector<Item> items;
    std::vector<RuleList> rules;
    std::vector<std::uint64_t> vocc;
    std::vector<BoundarySnapshot> boundary;
    std::vector<std::vector<JunctionTerm>> junction;
    FreqQueue queue;
    std::unordered_map<Bigram, std::unordered_set<std::int32_t>, BigramHash> pair_sites;
    std::unordered_map<Bigram, std::unordered_set<std::int32_t>, BigramHash> run_sites;

    std::uint32_t hash_rule = 0;
    std::uint32_t dollar_rule = 0;
    std::uint32_t level = 0;
    std::uint64_t text_len = 0;
    Symbol next_letter = 0;
    std::uint64_t input_vars = 0;
    std::uint64_t cumulative = 0;
    std::uint64_t live_count = 0;
    std::uint64_t recollect_mutations = 0;
    std::uint64_t total_mutations = 0;
    RecompressOptions opt;
    std::vector<LevelStats> levels;
    std::vector<Symbol> debug_text;
    int phase = 1;

    // ---- basic item access ----------------------------------------------

    bool is_run(std::int32_t x) const { return x != kNone && !items[x].is_var; }

    std::uint64_t interior_mass(std::int32_t x) const {
        const Item& it = items[x];
        if (it.is_var || it.exp < 2) return 0;
        if (!is_run(it.prev) || !is_run(it.next)) return 0;
        return (it.exp / 2) * vocc[it.rule];
    }

    void post(Bigram b, std::int64_t delta) {
        if (delta == 0) return;
        queue.add(b, delta);
        ++total_mutations;
    }

    // Interior-mass bracket: subtract before a structural edit, re-add
    // after. Over-inclusion of untouched neighbours is harmless.
    void contrib_sub(std::int32_t x) {
        if (x == kNone || !items[x].alive || items[x].is_var) return;
        std::uint64_t m = interior_mass(x);
        if (m) post({items[x].letter, items[x].letter}, -static_cast<std::int64_t>(m));
    }
    void contrib_add(std::int32_t x) {
        if (x == kNone || !items[x].alive || items[x].is_var) return;
        std::uint64_t m = interior_mass(x);
        if (m) post({items[x].letter, items[x].letter}, static_cast<std::int64_t>(m));
    }

    void add_adj(std::int32_t a, std::int32_t b) {
        if (!is_run(a) || !is_run(b)) return;
        Bigram bg{items[a].letter, items[b].letter};
        post(bg, static_cast<std::int64_t>(vocc[items[a].rule]));
        pair_sites[bg].insert(a);
    }
    void remove_adj(std::int32_t a, std::int32_t b) {
        if (!is_run(a) || !is_run(b)) return;
        Bigram bg{items[a].letter, items[b].letter};
        post(bg, -static_cast<std::int64_t>(vocc[items[a].rule]));
        pair_sites[bg].erase(a);
    }
    void add_site(std::int32_t x) {
        if (is_run(x) && items[x].exp >= 2)
            run_sites[{items[x].letter, items[x].letter}].insert(x);
    }
    void remove_site(std::int32_t x) {
        if (is_run(x) && items[x].exp >= 2)
            run_sites[{items[x].letter, items[x].letter}].erase(x);
    }

    void link(std::uint32_t rule, std::int32_t a, std::int32_t b) {
        if (a != kNone) items[a].next = b;
        else rules[rule].head = b;
        if (b != kNone) items[b].prev = a;
        else rules[rule].tail = a;
    }

    // ---- structural verbs -------------------------------------------------

    std::int32_t new_item(const Item& proto) {
        items.push_back(proto);
        return static_cast<std::int32_t>(items.size() - 1);
    }

    /// Inserts a run between a and b (either may be kNone), merging into an
    /// equal-letter run neighbour instead of growing the list.
    void insert_run(std::uint32_t rule, std::int32_t a, std::int32_t b, Symbol letter,
                    std::uint64_t exp) {
        if (exp == 0) return;
        if (is_run(a) && items[a].letter == letter) {
            grow_run(a, exp);
            return;
        }
        if (is_run(b) && items[b].letter == letter) {
            grow_run(b, exp);
            return;
        }
        contrib_sub(a);
        contrib_sub(b);
        if (a != kNone && b != kNone) remove_adj(a, b);
        std::int32_t n = new_item({false, 0, letter, exp, a, b, rule, true});
        link(rule, a, n);
        link(rule, n, b);
        add_adj(a, n);
        add_adj(n, b);
        add_site(n);
        rules[rule].run_count += 1;
        rules[rule].letter_count += exp;
        contrib_add(a);
        contrib_add(b);
        contrib_add(n);
    }

    void grow_run(std::int32_t x, std::uint64_t exp) {
        contrib_sub(x);
        remove_site(x);
        items[x].exp += exp;
        rules[items[x].rule].letter_count += exp;
        add_site(x);
        contrib_add(x);
    }

    /// Removes exactly k letters from a run (k < exp).
    void shrink_run(std::int32_t x, std::uint64_t k) {
        GRC_CHECK(items[x].exp > k, "shrink_run would empty the run");
        contrib_sub(x);
        remove_site(x);
        items[x].exp -= k;
        rules[items[x].rule].letter_count -= k;
        add_site(x);
        contrib_add(x);
    }

    /// Unlinks an item; adjacent equal-letter runs left behind coalesce.
    void erase_item(std::int32_t x) {
        const std::uint32_t rule = items[x].rule;
        std::int32_t p = items[x].prev;
        std::int32_t n = items[x].next;
        contrib_sub(x);
        contrib_sub(p);
        contrib_sub(n);
        if (p != kNone) remove_adj(p, x);
        if (n != kNone) remove_adj(x, n);
        if (!items[x].is_var) {
            remove_site(x);
            rules[rule].run_count -= 1;
            rules[rule].letter_count -= items[x].exp;
        }
        link(rule, p, n);
        items[x].alive = false;
        if (p != kNone && n != kNone && is_run(p) && is_run(n) &&
            items[p].letter == items[n].letter) {
            // Coalesce n into p. nn keeps a run on its left either way, so
            // its interior mass needs no bracket.
            std::int32_t nn = items[n].next;
            if (nn != kNone) remove_adj(n, nn);
            remove_site(p);
            remove_site(n);
            items[p].exp += items[n].exp;
            rules[rule].run_count -= 1;
            link(rule, p, nn);
            items[n].alive = false;
            add_site(p);
            if (nn != kNone) add_adj(p, nn);
        } else if (p != kNone && n != kNone) {
            add_adj(p, n);
        }
        contrib_add(p);
        contrib_add(n);
    }

    // ---- construction ------------------------------------------------------

    void build(const LevelGrammar& g) {
        sigma = g.sigma;
        hash_rule = g.hash_rule;
        dollar_rule = g.dollar_rule;
        text_len = g.text_len;
        next_letter = g.next_letter;
        rules.resize(g.rules.size());
        junction.resize(g.rules.size());
        vocc = compute_vocc(g);
        live_count = g.live_rules();

        for (std::uint32_t i = 0; i < g.rules.size(); ++i) {
            const LevelRule& src = g.rules[i];
            RuleList& dst = rules[i];
            dst.null = src.null;
            if (src.null) continue;
            std::int32_t prev = kNone;
            auto push = [&](const Item& proto) {
                std::int32_t id = new_item(proto);
                link(i, prev, id);
                prev = id;
            };
            if (src.left) push({true, *src.left, 0, 0, kNone, kNone, i, true});
            for (const RlRun& r : src.mid.runs()) {
                push({false, 0, r.letter, r.exp, kNone, kNone, i, true});
                dst.run_count += 1;
                dst.letter_count += r.exp;
            }
            if (src.right) push({true, *src.right, 0, 0, kNone, kNone, i, true});
            link(i, prev, kNone);
        }

        // Register the explicit layer.
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            if (rules[i].null) continue;
            for (std::int32_t x = rules[i].head; x != kNone; x = items[x].next) {
                add_site(x);
                contrib_add(x);
                if (items[x].next != kNone) add_adj(x, items[x].next);
            }
        }
    }

    // ---- per-level boundary + junction refresh ----------------------------

    void recompute_boundary() {
        boundary.assign(rules.size(), {});
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            if (rules[i].null) continue;
            BoundarySnapshot e;
            e.length = rules[i].letter_count;
            std::int32_t h = rules[i].head;
            std::int32_t t = rules[i].tail;
            if (items[h].is_var) e.length += boundary[items[h].var].length;
            if (t != h && items[t].is_var) e.length += boundary[items[t].var].length;

            // Leftmost block: walk items while the block stays open; stops
            // after at most three pieces because adjacent runs differ.
            bool have = false, open = true;
            RlRun lmb{};
            for (std::int32_t x = h; x != kNone && open; x = items[x].next) {
                RlRun piece = items[x].is_var ? boundary[items[x].var].lmb
                                              : RlRun{items[x].letter, items[x].exp};
                bool piece_whole = items[x].is_var ? boundary[items[x].var].single_block : true;
                if (!have) {
                    lmb = piece;
                    open = piece_whole;
                    have = true;
                } else if (piece.letter == lmb.letter) {
                    lmb.exp += piece.exp;
                    open = piece_whole;
                } else {
                    open = false;
                }
            }
            e.lmb = lmb;

            bool rhave = false, ropen = true;
            RlRun rmb{};
            for (std::int32_t x = t; x != kNone && ropen; x = items[x].prev) {
                RlRun piece = items[x].is_var ? boundary[items[x].var].rmb
                                              : RlRun{items[x].letter, items[x].exp};
                bool piece_whole = items[x].is_var ? boundary[items[x].var].single_block : true;
                if (!rhave) {
                    rmb = piece;
                    ropen = piece_whole;
                    rhave = true;
                } else if (piece.letter == rmb.letter) {
                    rmb.exp += piece.exp;
                    ropen = piece_whole;
                } else {
                    ropen = false;
                }
            }
            e.rmb = rmb;
            e.single_block = (e.lmb.exp == e.length);
            if (e.single_block) e.rmb = e.lmb;
            boundary[i] = e;
        }
    }

    std::optional<RlRun> left_child_rmb(std::uint32_t i, bool& sb) const {
        std::int32_t h = rules[i].head;
        if (h == kNone || !items[h].is_var) return std::nullopt;
        sb = boundary[items[h].var].single_block;
        return boundary[items[h].var].rmb;
    }
    std::optional<RlRun> right_child_lmb(std::uint32_t i, bool& sb) const {
        std::int32_t t = rules[i].tail;
        std::int32_t h = rules[i].head;
        if (t == kNone || t == h || !items[t].is_var) return std::nullopt;
        sb = boundary[items[t].var].single_block;
        return boundary[items[t].var].lmb;
    }

    std::int32_t first_run_item(std::uint32_t i) const {
        std::int32_t x = rules[i].head;
        if (x != kNone && items[x].is_var) x = items[x].next;
        return is_run(x) ? x : kNone;
    }
    std::int32_t last_run_item(std::uint32_t i) const {
        std::int32_t x = rules[i].tail;
        if (x != kNone && items[x].is_var) x = items[x].prev;
        return is_run(x) ? x : kNone;
    }

    /// Everything rule i contributes beyond its in-mid explicit layer:
    /// boundary-crossing bigrams and the maximality-corrected blocks that
    /// touch a junction or a mid end.
    std::vector<JunctionTerm> junction_terms(std::uint32_t i) const {
        std::vector<JunctionTerm> terms;
        const std::uint64_t v = vocc[i];
        bool sb_l = false, sb_r = false;
        std::optional<RlRun> A = left_child_rmb(i, sb_l);
        std::optional<RlRun> B = right_child_lmb(i, sb_r);
        const std::uint32_t k = rules[i].run_count;
        auto emit = [&](Bigram bg, std::uint64_t w) {
            if (w) terms.push_back({bg, w});
        };

        if (k == 0) {
            if (A && B) {
                if (A->letter != B->letter) {
                    emit({A->letter, B->letter}, v);
                    if (A->exp >= 2 && !sb_l) emit({A->letter, A->letter}, (A->exp / 2) * v);
                    if (B->exp >= 2 && !sb_r) emit({B->letter, B->letter}, (B->exp / 2) * v);
                } else {
                    std::uint64_t d = A->exp + B->exp;
                    if (d >= 2 && !sb_l && !sb_r) emit({A->letter, A->letter}, (d / 2) * v);
                }
            }
            return terms;
        }

        const Item& m1 = items[first_run_item(i)];
        const Item& mk = items[last_run_item(i)];
        if (A && A->letter != m1.letter) emit({A->letter, m1.letter}, v);
        if (B && mk.letter != B->letter) emit({mk.letter, B->letter}, v);

        if (k == 1) {
            const Symbol c = m1.letter;
            std::uint64_t d = m1.exp;
            if (A && A->letter == c) d += A->exp;
            if (B && B->letter == c) d += B->exp;
            const bool wit_l = A && (A->letter != c || !sb_l);
            const bool wit_r = B && (B->letter != c || !sb_r);
            if (d >= 2 && wit_l && wit_r) emit({c, c}, (d / 2) * v);
            if (A && A->letter != c && A->exp >= 2 && !sb_l)
                emit({A->letter, A->letter}, (A->exp / 2) * v);
            if (B && B->letter != c && B->exp >= 2 && !sb_r)
                emit({B->letter, B->letter}, (B->exp / 2) * v);
            return terms;
        }

        // k >= 2: the two junctions are independent.
        if (A) {
            if (A->letter == m1.letter) {
                std::uint64_t d = A->exp + m1.exp;
                if (!sb_l) emit({m1.letter, m1.letter}, (d / 2) * v);
            } else {
                if (A->exp >= 2 && !sb_l) emit({A->letter, A->letter}, (A->exp / 2) * v);
                if (m1.exp >= 2) emit({m1.letter, m1.letter}, (m1.exp / 2) * v);
            }
        }
        if (B) {
            if (B->letter == mk.letter) {
                std::uint64_t d = B->exp + mk.exp;
                if (!sb_r) emit({mk.letter, mk.letter}, (d / 2) * v);
            } else {
                if (B->exp >= 2 && !sb_r) emit({B->letter, B->letter}, (B->exp / 2) * v);
                if (mk.exp >= 2) emit({mk.letter, mk.letter}, (mk.exp / 2) * v);
            }
        }
        return terms;
    }

    void retire_junction(std::uint32_t i) {
        for (const JunctionTerm& t : junction[i])
            post(t.bigram, -static_cast<std::int64_t>(t.weight));
        junction[i].clear();
    }

    std::uint64_t recollect_level() {
        recompute_boundary();
        std::uint64_t mutations = 0;
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            if (rules[i].null) continue;
            std::vector<JunctionTerm> fresh = junction_terms(i);
            mutations += junction[i].size() + fresh.size();
            retire_junction(i);
            for (const JunctionTerm& t : fresh)
                post(t.bigram, static_cast<std::int64_t>(t.weight));
            junction[i] = std::move(fresh);
        }
        recollect_mutations = mutations;
        GRC_CHECK(mutations <= 16 * std::max<std::uint64_t>(live_count, 1),
                  "junction refresh exceeded the locality budget");
        return mutations;
    }

    // ---- uncrossing --------------------------------------------------------

    void nullify(std::uint32_t i) {
        GRC_CHECK(rules[i].head == kNone, "nullify on a non-empty rule");
        rules[i].null = true;
        retire_junction(i);
        --live_count;
    }

    void uncross_nonrepeating(Symbol c1, Symbol c2) {
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            if (rules[i].null) continue;
            std::int32_t head = rules[i].head;
            std::int32_t tail = rules[i].tail;
            const bool has_l = items[head].is_var;
            const bool has_r = tail != head && items[tail].is_var;
            const std::int32_t first_run = first_run_item(i);
            const std::int32_t last_run = last_run_item(i);
            const bool mid_empty = (first_run == kNone);

            const bool del_front = !has_l && !mid_empty && items[first_run].letter == c2;
            const bool del_back = !has_r && !mid_empty && items[last_run].letter == c1;

            if (has_l) {
                const bool at_last = mid_empty && !has_r;
                if (!at_last && boundary[items[head].var].rmb.letter == c1)
                    insert_run(i, head, items[head].next, c1, 1);
            }
            if (has_r) {
                const bool at_first = !has_l && mid_empty;
                if (!at_first && boundary[items[tail].var].lmb.letter == c2)
                    insert_run(i, items[tail].prev, tail, c2, 1);
            }
            if (del_front) {
                if (items[first_run].exp == 1) erase_item(first_run);
                else shrink_run(first_run, 1);
            }
            if (del_back) {
                if (items[last_run].exp == 1) erase_item(last_run);
                else shrink_run(last_run, 1);
            }
            if (has_l && rules[items[head].var].null) erase_item(head);
            if (has_r && rules[items[tail].var].null) erase_item(tail);
            if (rules[i].head == kNone) nullify(i);
        }
        GRC_CHECK(!rules[dollar_rule].null, "start rule nulled during uncross");
    }

    void uncross_repeating(Symbol c) {
        const std::size_t n = rules.size();
        std::vector<std::uint64_t> pre(n, 0), suf(n, 0), full(n, 0);
        std::vector<bool> now_null(n, false);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (rules[i].null) continue;
            std::int32_t head = rules[i].head;
            std::int32_t tail = rules[i].tail;
            const bool has_l = items[head].is_var;
            const bool has_r = tail != head && items[tail].is_var;

            bool left_live = false, right_live = false;
            if (has_l) {
                const std::uint32_t y = items[head].var;
                if (now_null[y]) {
                    std::uint64_t run = full[y];
                    erase_item(head);
                    insert_run(i, kNone, rules[i].head, c, run);
                } else {
                    left_live = true;
                    insert_run(i, head, items[head].next, c, suf[y]);
                }
            }
            if (has_r) {
                const std::uint32_t z = items[tail].var;
                if (now_null[z]) {
                    std::uint64_t run = full[z];
                    erase_item(tail);
                    insert_run(i, rules[i].tail, kNone, c, run);
                } else {
                    right_live = true;
                    insert_run(i, items[tail].prev, tail, c, pre[z]);
                }
            }

            std::uint64_t p = 0, s = 0;
            if (!left_live) {
                std::int32_t h = rules[i].head;
                if (is_run(h) && items[h].letter == c) {
                    p = items[h].exp;
                    erase_item(h);
                }
            }
            if (!right_live) {
                std::int32_t t = rules[i].tail;
                if (is_run(t) && items[t].letter == c) {
                    s = items[t].exp;
                    erase_item(t);
                }
            }

            if (rules[i].head == kNone) {
                nullify(i);
                now_null[i] = true;
                full[i] = p + s;
                GRC_CHECK(full[i] == boundary[i].length,
                          "nullified rule was not a pure power of the target letter");
            } else {
                pre[i] = left_live ? pre[items[rules[i].head].var] : p;
                suf[i] = right_live ? suf[items[rules[i].tail].var] : s;
            }
        }
        GRC_CHECK(!rules[dollar_rule].null && pre[dollar_rule] == 0 && suf[dollar_rule] == 0,
                  "sentinels failed to bound a block pop");
    }

    // ---- replacement -------------------------------------------------------

    std::uint64_t replace(Bigram b, Symbol fresh) {
        std::uint64_t count = 0;
        if (b.repeating()) {
            const Symbol c = b.left;
            auto it = run_sites.find(b);
            std::vector<std::int32_t> sites;
            if (it != run_sites.end()) sites.assign(it->second.begin(), it->second.end());
            for (std::int32_t x : sites) {
                GRC_CHECK(items[x].alive && items[x].letter == c && items[x].exp >= 2,
                          "stale run site");
                const std::uint64_t d = items[x].exp;
                const std::uint32_t rule = items[x].rule;
                std::int32_t p = items[x].prev;
                std::int32_t nx = items[x].next;
                contrib_sub(x);
                contrib_sub(p);
                contrib_sub(nx);
                if (p != kNone) remove_adj(p, x);
                if (nx != kNone) remove_adj(x, nx);
                remove_site(x);
                rules[rule].letter_count -= d;
                items[x].letter = fresh;
                items[x].exp = d / 2;
                rules[rule].letter_count += d / 2;
                add_site(x);
                if (p != kNone) add_adj(p, x);
                if (nx != kNone) add_adj(x, nx);
                contrib_add(p);
                contrib_add(x);
                contrib_add(nx);
                if (d % 2 == 1) insert_run(rule, x, nx, c, 1);
                count += (d / 2) * vocc[rule];
            }
        } else {
            auto it = pair_sites.find(b);
            std::vector<std::int32_t> sites;
            if (it != pair_sites.end()) sites.assign(it->second.begin(), it->second.end());
            for (std::int32_t a : sites) {
                GRC_CHECK(items[a].alive && items[a].letter == b.left, "stale pair site");
                std::int32_t r = items[a].next;
                GRC_CHECK(is_run(r) && items[r].letter == b.right,
                          "pair site lost its partner");
                const std::uint32_t rule = items[a].rule;
                insert_run(rule, a, r, fresh, 1);
                if (items[a].exp == 1) erase_item(a);
                else shrink_run(a, 1);
                if (items[r].exp == 1) erase_item(r);
                else shrink_run(r, 1);
                count += vocc[rule];
            }
        }
        GRC_CHECK(text_len >= count, "replacement exceeded the text length");
        text_len -= count;
        return count;
    }

    // ---- views -------------------------------------------------------------

    LevelGrammar to_level_grammar() const {
        LevelGrammar g;
        g.sigma = sigma;
        g.hash_rule = hash_rule;
        g.dollar_rule = dollar_rule;
        g.level = level;
        g.text_len = text_len;
        g.next_letter = next_letter;
        g.rules.resize(rules.size());
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            LevelRule& dst = g.rules[i];
            if (rules[i].null) {
                dst.null = true;
                continue;
            }
            for (std::int32_t x = rules[i].head; x != kNone; x = items[x].next) {
                const Item& it = items[x];
                if (it.is_var) {
                    // A lone variable counts as a left child.
                    if (x == rules[i].head) dst.left = it.var;
                    else dst.right = it.var;
                } else {
                    dst.mid.append(it.letter, it.exp);
                }
            }
        }
        return g;
    }

    std::uint64_t grammar_size() const {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < rules.size(); ++i) {
            if (rules[i].null) continue;
            for (std::int32_t x = rules[i].head; x != kNone; x = items[x].next) s += 1;
        }
        return s;
    }

    bool step() {
        std::uint64_t refreshed = recollect_level();
        (void)refreshed;
        if (opt.debug_verify) {
            LevelGrammar g = to_level_grammar();
            GRC_CHECK(expand_level(g, false) == debug_text,
                      "expansion drifted before level");
            std::vector<std::uint64_t> vv = compute_vocc(g);
            BoundaryInfo bi = compute_boundary_info(g);
            FreqTable scan_table = compute_frequencies(g, vv, bi);
            FreqTable queue_table = queue.snapshot();
            GRC_CHECK(queue_table == scan_table,
                      "queue disagrees with the scan-engine frequency table");
        }

        std::optional<Bigram> sel = queue.select();
        if (!sel) return false;
        const std::uint64_t f = queue.freq(*sel);
        const std::uint64_t gsize = grammar_size();
        const std::uint64_t live = live_count;
        const std::uint64_t tlen_pre = text_len;

        if (sel->repeating()) uncross_repeating(sel->left);
        else uncross_nonrepeating(sel->left, sel->right);

        const std::uint64_t count = replace(*sel, next_letter);
        GRC_CHECK(count == f, "weighted replacement count disagrees with the queue");
        GRC_CHECK(text_len == tlen_pre - f, "length law violated");
        GRC_CHECK(grammar_size() <= text_len + 2 * rules.size(), "size law violated");

        if (opt.debug_verify) {
            debug_text = replace_pair_text(debug_text, *sel, next_letter);
            GRC_CHECK(expand_level(to_level_grammar(), false) == debug_text,
                      "replacement changed the expansion");
        }

        cumulative += f;
        levels.push_back({level, *sel, f, gsize, live, tlen_pre - 2, cumulative, phase});
        ++next_letter;
        ++level;
        return true;
    }

    RecompressResult finish() {
        RecompressResult res;
        res.grammar.sigma = sigma;
        for (const LevelStats& l : levels)
            res.grammar.pairs.emplace_back(l.bigram.left, l.bigram.right);
        res.grammar.final_seq = expand_level(to_level_grammar(), true);
        res.stats.levels = levels;
        res.stats.input_vars = input_vars;
        res.stats.pairs = levels.size();
        res.stats.final_grammar_size = grammar_size();
        res.stats.final_live_vars = live_count;
        return res;
    }
};

FastRecompressor::FastRecompressor(const Slp& slp, RecompressOptions opt)
    : impl_(std::make_unique<Impl>()) {
    LevelGrammar g0 = attach_sentinels(slp);
    impl_->opt = opt;
    impl_->input_vars = slp.rules.size();
    impl_->build(g0);
    if (opt.debug_verify) impl_->debug_text = expand_level(g0, false);
}

FastRecompressor::~FastRecompressor() = default;
FastRecompressor::FastRecompressor(FastRecompressor&&) noexcept = default;
FastRecompressor& FastRecompressor::operator=(FastRecompressor&&) noexcept = default;

bool FastRecompressor::step() {
    impl_->phase = phase;
    return impl_->step();
}

RecompressResult FastRecompressor::finish() { return impl_->finish(); }

std::uint64_t FastRecompressor::text_len() const { return impl_->text_len; }
std::uint64_t FastRecompressor::last_recollect_mutations() const {
    return impl_->recollect_mutations;
}
std::uint64_t FastRecompressor::total_mutations() const { return impl_->total_mutations; }

RecompressResult FastRecompressor::run(const Slp& slp, RecompressOptions opt) {
    FastRecompressor engine(slp, opt);
    while (engine.step()) {
    }
    return engine.finish();
}

}  // namespace grc
