# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled twin of rsl._kernel_py with the same API.

Node structure lives in flat C++ vectors (content id, child offsets, one
shared child buffer); level deletion walks those arrays directly and
memoizes per (node, depth) in dense vectors, so the only dict traffic is
interning newly created nodes.
"""

from libcpp.vector cimport vector


cdef class ForestStore:
    cdef dict _content_ids
    cdef list _contents
    cdef dict _node_ids
    cdef dict _nested_memo
    cdef vector[long] _cid
    cdef vector[long] _off
    cdef vector[long] _buf
    cdef vector[vector[long]] _drop_memo

    def __init__(self):
        self._content_ids = {}
        self._contents = []
        self._node_ids = {}
        self._nested_memo = {}
        self._off.push_back(0)

    # -- interning ---------------------------------------------------------

    cpdef long content_id(self, content):
        cdef object cid = self._content_ids.get(content)
        if cid is None:
            cid = len(self._contents)
            self._content_ids[content] = cid
            self._contents.append(tuple(content))
        return cid

    cpdef long node(self, long cid, tuple child_ids):
        cdef object key = (cid, child_ids)
        cdef object nid = self._node_ids.get(key)
        cdef long out, c
        if nid is None:
            out = self._cid.size()
            self._node_ids[key] = out
            self._cid.push_back(cid)
            for c in child_ids:
                self._buf.push_back(c)
            self._off.push_back(self._buf.size())
            return out
        return nid

    def intern_nested(self, nested):
        content, children = nested
        cdef list ids = sorted([self.intern_nested(ch) for ch in children])
        return self.node(self.content_id(content), tuple(ids))

    def intern_roots(self, roots):
        return tuple(sorted([self.intern_nested(r) for r in roots]))

    # -- extraction --------------------------------------------------------

    def nested(self, long nid):
        out = self._nested_memo.get(nid)
        cdef long i
        if out is None:
            kids = sorted(
                [self.nested(self._buf[i]) for i in range(self._off[nid], self._off[nid + 1])]
            )
            out = (self._contents[self._cid[nid]], tuple(kids))
            self._nested_memo[nid] = out
        return out

    def nested_roots(self, root_ids):
        return tuple(sorted([self.nested(r) for r in root_ids]))

    # -- level deletion ----------------------------------------------------

    cdef long _memo_get(self, long depth, long nid):
        if <size_t>depth >= self._drop_memo.size():
            return -1
        if <size_t>nid >= self._drop_memo[depth].size():
            return -1
        return self._drop_memo[depth][nid]

    cdef void _memo_set(self, long depth, long nid, long value):
        while <size_t>depth >= self._drop_memo.size():
            self._drop_memo.push_back(vector[long]())
        if <size_t>nid >= self._drop_memo[depth].size():
            self._drop_memo[depth].resize(nid + 1, -1)
        self._drop_memo[depth][nid] = value

    cpdef long drop_node(self, long nid, long depth):
        cdef long out = self._memo_get(depth, nid)
        if out >= 0:
            return out
        cdef vector[long] merged
        cdef long i, j, c
        cdef list kids
        if depth == 1:
            for i in range(self._off[nid], self._off[nid + 1]):
                c = self._buf[i]
                for j in range(self._off[c], self._off[c + 1]):
                    merged.push_back(self._buf[j])
            kids = [merged[i] for i in range(<long>merged.size())]
        else:
            kids = [
                self.drop_node(self._buf[i], depth - 1)
                for i in range(self._off[nid], self._off[nid + 1])
            ]
        kids.sort()
        out = self.node(self._cid[nid], tuple(kids))
        self._memo_set(depth, nid, out)
        return out

    def drop_roots(self, root_ids, long depth):
        cdef long r, i
        cdef list merged
        if depth == 0:
            merged = []
            for r in root_ids:
                for i in range(self._off[r], self._off[r + 1]):
                    merged.append(self._buf[i])
            merged.sort()
            return tuple(merged)
        return tuple(sorted([self.drop_node(r, depth) for r in root_ids]))

    def size(self):
        return self._cid.size()
