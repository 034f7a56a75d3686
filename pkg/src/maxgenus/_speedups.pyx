# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spanning-tree enumeration kernel.

Twin of maxgenus._pykernel with identical entry-point semantics and
enumeration order; see that module's docstring for the interface contract.
Everything here is flat C arrays plus a pair of rollback union-finds, so a
full sweep costs a few machine ops per (tree, edge) pair.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

COMPILED = True

DEF MAX_CANDIDATES = 400


cdef struct Token:
    int kind  # 0 parity flip, 1 merge
    int ru
    int rw
    int pu
    int pw


cdef class _Scan:
    cdef int n, m, ncand, target, stop_at
    cdef int* eu
    cdef int* ev
    cdef int* cand
    cdef int* tparent
    cdef int* tsize
    cdef int* cparent
    cdef int* csize
    cdef int* cparity
    cdef int* included
    cdef int* best_tree
    cdef int* head
    cdef int* half_to
    cdef int* half_next
    cdef int* stackbuf
    cdef char* seen
    cdef Token* leaf_toks
    cdef int ninc, odd, best
    cdef long long scanned

    def __cinit__(self, int n, object eu, object ev, int stop_at):
        cdef int m = len(eu)
        if n <= 0:
            raise ValueError("vertex count must be positive")
        if len(ev) != m:
            raise ValueError("endpoint arrays differ in length")
        self.n = n
        self.m = m
        self.stop_at = stop_at
        self.target = n - 1
        self.eu = <int*> malloc(m * sizeof(int))
        self.ev = <int*> malloc(m * sizeof(int))
        self.cand = <int*> malloc((m + 1) * sizeof(int))
        self.tparent = <int*> malloc(n * sizeof(int))
        self.tsize = <int*> malloc(n * sizeof(int))
        self.cparent = <int*> malloc(n * sizeof(int))
        self.csize = <int*> malloc(n * sizeof(int))
        self.cparity = <int*> malloc(n * sizeof(int))
        self.included = <int*> malloc((n + 1) * sizeof(int))
        self.best_tree = <int*> malloc((n + 1) * sizeof(int))
        self.head = <int*> malloc(n * sizeof(int))
        self.half_to = <int*> malloc((2 * m + 2) * sizeof(int))
        self.half_next = <int*> malloc((2 * m + 2) * sizeof(int))
        self.stackbuf = <int*> malloc(n * sizeof(int))
        self.seen = <char*> malloc(n)
        self.leaf_toks = <Token*> malloc((m + 1) * sizeof(Token))
        if (self.eu == NULL or self.ev == NULL or self.cand == NULL or
                self.tparent == NULL or self.tsize == NULL or
                self.cparent == NULL or self.csize == NULL or
                self.cparity == NULL or self.included == NULL or
                self.best_tree == NULL or self.head == NULL or
                self.half_to == NULL or self.half_next == NULL or
                self.stackbuf == NULL or self.seen == NULL or
                self.leaf_toks == NULL):
            raise MemoryError()

        cdef int i, u, w
        self.ncand = 0
        for i in range(m):
            u = eu[i]
            w = ev[i]
            if u < 0 or u >= n or w < 0 or w >= n:
                raise ValueError("endpoint out of range")
            self.eu[i] = u
            self.ev[i] = w
            if u != w:
                self.cand[self.ncand] = i
                self.ncand += 1
        if self.ncand > MAX_CANDIDATES:
            raise ValueError(
                f"too many candidate edges ({self.ncand}) to enumerate"
            )
        for i in range(n):
            self.tparent[i] = i
            self.tsize[i] = 1
            self.cparent[i] = i
            self.csize[i] = 1
            self.cparity[i] = 0
        self.ninc = 0
        self.odd = 0
        self.best = n + m + 1
        self.scanned = 0

        if not self._connected():
            raise ValueError("graph is not connected")

        # loops are co-tree in every branch: seed their parity once
        cdef Token tok
        for i in range(m):
            if self.eu[i] == self.ev[i]:
                self.cotree_add(self.eu[i], self.ev[i], &tok)

    def __dealloc__(self):
        free(self.eu)
        free(self.ev)
        free(self.cand)
        free(self.tparent)
        free(self.tsize)
        free(self.cparent)
        free(self.csize)
        free(self.cparity)
        free(self.included)
        free(self.best_tree)
        free(self.head)
        free(self.half_to)
        free(self.half_next)
        free(self.stackbuf)
        free(self.seen)
        free(self.leaf_toks)

    cdef bint _connected(self):
        cdef int i, pos, cnt = 0, top, a, b, e, reached
        memset(self.head, 0xff, self.n * sizeof(int))
        for i in range(self.ncand):
            pos = self.cand[i]
            cnt = self._push_half(self.eu[pos], self.ev[pos], cnt)
            cnt = self._push_half(self.ev[pos], self.eu[pos], cnt)
        memset(self.seen, 0, self.n)
        self.seen[0] = 1
        self.stackbuf[0] = 0
        top = 1
        reached = 1
        while top:
            top -= 1
            a = self.stackbuf[top]
            e = self.head[a]
            while e != -1:
                b = self.half_to[e]
                if not self.seen[b]:
                    self.seen[b] = 1
                    reached += 1
                    self.stackbuf[top] = b
                    top += 1
                e = self.half_next[e]
        return reached == self.n

    cdef inline int _push_half(self, int a, int b, int cnt):
        self.half_to[cnt] = b
        self.half_next[cnt] = self.head[a]
        self.head[a] = cnt
        return cnt + 1

    cdef inline int tfind(self, int x):
        while self.tparent[x] != x:
            x = self.tparent[x]
        return x

    cdef inline int cfind(self, int x):
        while self.cparent[x] != x:
            x = self.cparent[x]
        return x

    cdef void cotree_add(self, int u, int w, Token* tok):
        cdef int ru = self.cfind(u)
        cdef int rw = self.cfind(w)
        cdef int old, merged, tmp
        if ru == rw:
            old = self.cparity[ru]
            self.cparity[ru] = old ^ 1
            self.odd += 1 if old == 0 else -1
            tok.kind = 0
            tok.ru = ru
            tok.pu = old
        else:
            if self.csize[ru] < self.csize[rw]:
                tmp = ru
                ru = rw
                rw = tmp
            tok.kind = 1
            tok.ru = ru
            tok.rw = rw
            tok.pu = self.cparity[ru]
            tok.pw = self.cparity[rw]
            self.cparent[rw] = ru
            self.csize[ru] += self.csize[rw]
            merged = tok.pu ^ tok.pw ^ 1
            self.cparity[ru] = merged
            self.odd += merged - tok.pu - tok.pw

    cdef void cotree_undo(self, Token* tok):
        if tok.kind == 0:
            self.odd += 1 if tok.pu == 1 else -1
            self.cparity[tok.ru] = tok.pu
        else:
            self.odd += tok.pu + tok.pw - self.cparity[tok.ru]
            self.cparity[tok.ru] = tok.pu
            self.csize[tok.ru] -= self.csize[tok.rw]
            self.cparent[tok.rw] = tok.rw

    cdef bint exclude_viable(self, int idx):
        cdef int pos = self.cand[idx]
        cdef int u = self.eu[pos]
        cdef int w = self.ev[pos]
        cdef int cnt = 0, j, top, a, b, e
        memset(self.head, 0xff, self.n * sizeof(int))
        for j in range(self.ninc):
            pos = self.included[j]
            cnt = self._push_half(self.eu[pos], self.ev[pos], cnt)
            cnt = self._push_half(self.ev[pos], self.eu[pos], cnt)
        for j in range(idx + 1, self.ncand):
            pos = self.cand[j]
            cnt = self._push_half(self.eu[pos], self.ev[pos], cnt)
            cnt = self._push_half(self.ev[pos], self.eu[pos], cnt)
        memset(self.seen, 0, self.n)
        self.seen[u] = 1
        self.stackbuf[0] = u
        top = 1
        while top:
            top -= 1
            a = self.stackbuf[top]
            e = self.head[a]
            while e != -1:
                b = self.half_to[e]
                if b == w:
                    return True
                if not self.seen[b]:
                    self.seen[b] = 1
                    self.stackbuf[top] = b
                    top += 1
                e = self.half_next[e]
        return False

    cdef bint leaf(self, int i):
        cdef int cnt = 0, j, pos
        for j in range(i, self.ncand):
            pos = self.cand[j]
            self.cotree_add(self.eu[pos], self.ev[pos], &self.leaf_toks[cnt])
            cnt += 1
        self.scanned += 1
        if self.odd < self.best:
            self.best = self.odd
            for j in range(self.ninc):
                self.best_tree[j] = self.included[j]
        for j in range(cnt - 1, -1, -1):
            self.cotree_undo(&self.leaf_toks[j])
        return self.best <= self.stop_at

    cdef bint rec(self, int i, int chosen):
        cdef Token tok
        cdef int pos, u, w, ru, rw, tmp
        cdef bint done
        if chosen == self.target:
            return self.leaf(i)
        pos = self.cand[i]
        u = self.eu[pos]
        w = self.ev[pos]
        ru = self.tfind(u)
        rw = self.tfind(w)
        if ru == rw:
            self.cotree_add(u, w, &tok)
            done = self.rec(i + 1, chosen)
            self.cotree_undo(&tok)
            return done
        if self.tsize[ru] < self.tsize[rw]:
            tmp = ru
            ru = rw
            rw = tmp
        self.tparent[rw] = ru
        self.tsize[ru] += self.tsize[rw]
        self.included[self.ninc] = pos
        self.ninc += 1
        done = self.rec(i + 1, chosen + 1)
        self.ninc -= 1
        self.tparent[rw] = rw
        self.tsize[ru] -= self.tsize[rw]
        if done:
            return True
        if self.exclude_viable(i):
            self.cotree_add(u, w, &tok)
            done = self.rec(i + 1, chosen)
            self.cotree_undo(&tok)
            return done
        return False


def scan_deficiency(n, eu, ev, stop_at):
    """Minimum odd co-tree component count over all spanning trees.

    Same contract as maxgenus._pykernel.scan_deficiency.
    """
    cdef _Scan s = _Scan(n, eu, ev, stop_at)
    cdef bint stopped = s.rec(0, 0)
    cdef int j
    witness = tuple(s.best_tree[j] for j in range(s.target))
    return s.best, witness, s.scanned, not stopped
