/*
 * gengraphs: connected graphs on n <= 16 vertices, one per isomorphism class,
 * written as graph6 lines in canonical labelling.
 *
 *   gengraphs [-b] [-F] [-d mindeg] [-D maxdeg] n
 *
 *   -b  bipartite only         -F  claw-free only
 *   -d  minimum degree         -D  maximum degree
 *
 * Graphs are grown one vertex at a time. Level k holds every connected graph
 * on k vertices that has the requested hereditary properties, degree at most
 * maxdeg and degree at least mindeg - (n - k); duplicates are removed with a
 * hash set of canonical forms. Canonical forms come from equitable-partition
 * refinement plus individualisation, keeping the lexicographically largest
 * adjacency rows; automorphisms found at equal leaves prune sibling branches.
 */
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#define MAXN 16
#define MAXGEN 64

typedef uint32_t set_t;
typedef unsigned __int128 key_t128;

static int n_cur;
static set_t adj_cur[MAXN];

/* ---- canonical labelling --------------------------------------------- */

static set_t best_rows[MAXN];
static int best_lab[MAXN];
static int have_best;
static int gens[MAXGEN][MAXN];
static int ngens;

static void refine(int *lab, int *cellend, int n) {
    /* cellend[i] = 1 iff position i is the last of its cell */
    int changed = 1;
    while (changed) {
        changed = 0;
        for (int s = 0; s < n && !changed; ) {
            int e = s;
            while (!cellend[e]) e++;
            set_t smask = 0;
            for (int i = s; i <= e; i++) smask |= (set_t)1 << lab[i];
            for (int c = 0; c < n; ) {
                int ce = c;
                while (!cellend[ce]) ce++;
                if (ce > c) {
                    int cnt[MAXN], first = -1, differ = 0;
                    for (int i = c; i <= ce; i++) {
                        cnt[i] = __builtin_popcount(adj_cur[lab[i]] & smask);
                        if (first < 0) first = cnt[i];
                        else if (cnt[i] != first) differ = 1;
                    }
                    if (differ) {
                        for (int i = c + 1; i <= ce; i++) { /* stable insertion sort */
                            int kv = cnt[i], lv = lab[i], j = i - 1;
                            while (j >= c && cnt[j] > kv) {
                                cnt[j + 1] = cnt[j];
                                lab[j + 1] = lab[j];
                                j--;
                            }
                            cnt[j + 1] = kv;
                            lab[j + 1] = lv;
                        }
                        for (int i = c; i < ce; i++) cellend[i] = cnt[i] != cnt[i + 1];
                        changed = 1;
                    }
                }
                c = ce + 1;
            }
            s = e + 1;
        }
    }
}

static int find_root(int *uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
}

static void search(int *lab, int *cellend, int n, int *prefix, int depth) {
    refine(lab, cellend, n);
    int s = -1, e = -1;
    for (int i = 0; i < n; ) {
        int j = i;
        while (!cellend[j]) j++;
        if (j > i) { s = i; e = j; break; }
        i = j + 1;
    }
    if (s < 0) {
        int pos[MAXN];
        set_t rows[MAXN];
        for (int i = 0; i < n; i++) pos[lab[i]] = i;
        for (int i = 0; i < n; i++) {
            set_t r = 0, m = adj_cur[lab[i]];
            while (m) {
                int u = __builtin_ctz(m);
                m &= m - 1;
                r |= (set_t)1 << pos[u];
            }
            rows[i] = r;
        }
        int cmp = 0;
        if (have_best) {
            for (int i = 0; i < n && !cmp; i++)
                if (rows[i] != best_rows[i]) cmp = rows[i] > best_rows[i] ? 1 : -1;
        }
        if (!have_best || cmp > 0) {
            memcpy(best_rows, rows, sizeof(set_t) * n);
            memcpy(best_lab, lab, sizeof(int) * n);
            have_best = 1;
        } else if (cmp == 0 && ngens < MAXGEN) {
            for (int i = 0; i < n; i++) gens[ngens][best_lab[i]] = lab[i];
            ngens++;
        }
        return;
    }
    int cell[MAXN], csize = e - s + 1;
    memcpy(cell, lab + s, sizeof(int) * csize);
    set_t explored = 0;
    for (int ci = 0; ci < csize; ci++) {
        int v = cell[ci];
        if (explored) {
            int uf[MAXN];
            for (int i = 0; i < n; i++) uf[i] = i;
            for (int g = 0; g < ngens; g++) {
                int fixes = 1;
                for (int d = 0; d < depth && fixes; d++) fixes = gens[g][prefix[d]] == prefix[d];
                if (!fixes) continue;
                for (int i = 0; i < n; i++) {
                    int a = find_root(uf, i), b = find_root(uf, gens[g][i]);
                    if (a != b) uf[a] = b;
                }
            }
            int rv = find_root(uf, v), skip = 0;
            for (int u = 0; u < n && !skip; u++)
                if ((explored >> u & 1) && find_root(uf, u) == rv) skip = 1;
            if (skip) continue;
        }
        int lab2[MAXN], ce2[MAXN];
        memcpy(lab2, lab, sizeof(int) * n);
        memcpy(ce2, cellend, sizeof(int) * n);
        lab2[s] = v;
        int k = s + 1;
        for (int i = 0; i < csize; i++)
            if (cell[i] != v) lab2[k++] = cell[i];
        ce2[s] = 1;
        prefix[depth] = v;
        search(lab2, ce2, n, prefix, depth + 1);
        explored |= (set_t)1 << v;
    }
}

static void canonical(int n, set_t *out_rows) {
    int lab[MAXN], cellend[MAXN], prefix[MAXN];
    /* initial cells: by degree, ascending */
    for (int i = 0; i < n; i++) lab[i] = i;
    for (int i = 1; i < n; i++) {
        int v = lab[i], dv = __builtin_popcount(adj_cur[v]), j = i - 1;
        while (j >= 0 && __builtin_popcount(adj_cur[lab[j]]) > dv) {
            lab[j + 1] = lab[j];
            j--;
        }
        lab[j + 1] = v;
    }
    for (int i = 0; i < n; i++)
        cellend[i] = i == n - 1 || __builtin_popcount(adj_cur[lab[i]]) != __builtin_popcount(adj_cur[lab[i + 1]]);
    have_best = 0;
    ngens = 0;
    search(lab, cellend, n, prefix, 0);
    memcpy(out_rows, best_rows, sizeof(set_t) * n);
}

/* ---- hash set of canonical keys -------------------------------------- */

static key_t128 *table;
static size_t table_size, table_used;

static key_t128 pack(const set_t *rows, int n) {
    key_t128 k = (key_t128)1 << 127;
    int b = 0;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++, b++)
            if (rows[i] >> j & 1) k |= (key_t128)1 << b;
    return k;
}

static size_t slot_of(key_t128 k) {
    uint64_t h = (uint64_t)k ^ (uint64_t)(k >> 64) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return (size_t)h & (table_size - 1);
}

static void table_reset(size_t expected) {
    free(table);
    table_size = 1024;
    while (table_size < 2 * expected) table_size <<= 1;
    table = calloc(table_size, sizeof(key_t128));
    table_used = 0;
    if (!table) { fprintf(stderr, "gengraphs: out of memory\n"); exit(3); }
}

static int table_insert(key_t128 k);

static void table_grow(void) {
    key_t128 *old = table;
    size_t old_size = table_size;
    table_size <<= 1;
    table = calloc(table_size, sizeof(key_t128));
    if (!table) { fprintf(stderr, "gengraphs: out of memory\n"); exit(3); }
    table_used = 0;
    for (size_t i = 0; i < old_size; i++)
        if (old[i]) table_insert(old[i]);
    free(old);
}

static int table_insert(key_t128 k) {
    if (2 * (table_used + 1) > table_size) table_grow();
    size_t i = slot_of(k);
    while (table[i]) {
        if (table[i] == k) return 0;
        i = (i + 1) & (table_size - 1);
    }
    table[i] = k;
    table_used++;
    return 1;
}

/* ---- output ----------------------------------------------------------- */

static void write_graph6(const set_t *rows, int n) {
    char buf[64];
    int p = 0, acc = 0, nacc = 0;
    buf[p++] = (char)(63 + n);
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++) {
            acc = acc << 1 | (int)(rows[i] >> j & 1);
            if (++nacc == 6) { buf[p++] = (char)(63 + acc); acc = nacc = 0; }
        }
    if (nacc) buf[p++] = (char)(63 + (acc << (6 - nacc)));
    buf[p++] = '\n';
    fwrite(buf, 1, p, stdout);
}

/* ---- generation --------------------------------------------------------- */

typedef struct {
    set_t *rows;
    size_t count, cap;
    int k;
} level_t;

static void level_push(level_t *L, const set_t *rows) {
    if (L->count == L->cap) {
        L->cap = L->cap ? 2 * L->cap : 1024;
        L->rows = realloc(L->rows, L->cap * L->k * sizeof(set_t));
        if (!L->rows) { fprintf(stderr, "gengraphs: out of memory\n"); exit(3); }
    }
    memcpy(L->rows + L->count * L->k, rows, L->k * sizeof(set_t));
    L->count++;
}

static int opt_bip, opt_claw, opt_mindeg, opt_maxdeg;

static int claw_free_with_new(const set_t *par, int k, set_t s) {
    /* new vertex as centre: three pairwise non-adjacent neighbours */
    for (set_t a = s; a; a &= a - 1) {
        int x = __builtin_ctz(a);
        for (set_t b = s & ~par[x] & ~(((set_t)2 << x) - 1); b; b &= b - 1) {
            int y = __builtin_ctz(b);
            if (s & ~par[x] & ~par[y] & ~(((set_t)2 << y) - 1)) return 0;
        }
    }
    /* new vertex as a leaf of centre c: two non-adjacent neighbours of c outside s */
    for (set_t a = s; a; a &= a - 1) {
        int c = __builtin_ctz(a);
        set_t others = par[c] & ~s;
        for (set_t b = others; b; b &= b - 1) {
            int y = __builtin_ctz(b);
            if (others & ~par[y] & ~((set_t)1 << y)) return 0;
        }
    }
    (void)k;
    return 1;
}

static void two_colour(const set_t *par, int k, set_t *side0) {
    int col[MAXN];
    for (int i = 0; i < k; i++) col[i] = -1;
    int queue[MAXN], qh = 0, qt = 0;
    col[0] = 0;
    queue[qt++] = 0;
    while (qh < qt) {
        int v = queue[qh++];
        for (set_t m = par[v]; m; m &= m - 1) {
            int u = __builtin_ctz(m);
            if (col[u] < 0) { col[u] = 1 - col[v]; queue[qt++] = u; }
        }
    }
    *side0 = 0;
    for (int i = 0; i < k; i++)
        if (col[i] == 0) *side0 |= (set_t)1 << i;
}

int main(int argc, char **argv) {
    int n = -1;
    opt_maxdeg = MAXN;
    for (int i = 1; i < argc; i++) {
        if (!strcmp(argv[i], "-b")) opt_bip = 1;
        else if (!strcmp(argv[i], "-F")) opt_claw = 1;
        else if (!strcmp(argv[i], "-d") && i + 1 < argc) opt_mindeg = atoi(argv[++i]);
        else if (!strcmp(argv[i], "-D") && i + 1 < argc) opt_maxdeg = atoi(argv[++i]);
        else n = atoi(argv[i]);
    }
    if (n < 1 || n > MAXN) {
        fprintf(stderr, "usage: gengraphs [-b] [-F] [-d mindeg] [-D maxdeg] n   (1 <= n <= %d)\n", MAXN);
        return 1;
    }
    if (opt_mindeg > n - 1) return 0;

    level_t cur = {0}, nxt = {0};
    cur.k = 1;
    set_t k1[1] = {0};
    level_push(&cur, k1);
    if (n == 1) {
        if (opt_mindeg <= 0) write_graph6(k1, 1);
        return 0;
    }
    for (int k = 2; k <= n; k++) {
        int need = opt_mindeg - (n - k);
        int last = k == n;
        free(nxt.rows);
        nxt.rows = NULL;
        nxt.cap = nxt.count = 0;
        nxt.k = k;
        table_reset(last ? 1u << 20 : cur.count * 4);
        for (size_t gi = 0; gi < cur.count; gi++) {
            const set_t *par = cur.rows + gi * cur.k;
            int pk = k - 1;
            set_t eligible = 0, forced = 0, side0 = 0;
            for (int v = 0; v < pk; v++) {
                int d = __builtin_popcount(par[v]);
                if (d < opt_maxdeg) eligible |= (set_t)1 << v;
                if (d < need) forced |= (set_t)1 << v;
            }
            if (forced & ~eligible) continue;
            if (opt_bip) two_colour(par, pk, &side0);
            set_t full = ((set_t)1 << pk) - 1;
            set_t free_bits = eligible & ~forced;
            /* enumerate s = forced | subset of free_bits */
            set_t sub = 0;
            do {
                set_t s = forced | sub;
                sub = (sub - free_bits) & free_bits;
                if (!s) continue;
                int deg = __builtin_popcount(s);
                if (deg > opt_maxdeg || deg < need) continue;
                if (opt_bip && (s & side0) && (s & ~side0 & full)) continue;
                if (opt_claw && !claw_free_with_new(par, pk, s)) continue;
                n_cur = k;
                for (int v = 0; v < pk; v++) adj_cur[v] = par[v] | ((s >> v & 1) ? (set_t)1 << pk : 0);
                adj_cur[pk] = s;
                set_t rows[MAXN];
                canonical(k, rows);
                if (table_insert(pack(rows, k))) {
                    if (last) write_graph6(rows, k);
                    else level_push(&nxt, rows);
                }
            } while (sub);
        }
        if (!last) {
            level_t tmp = cur;
            cur = nxt;
            nxt = tmp;
        }
    }
    fflush(stdout);
    return 0;
}
