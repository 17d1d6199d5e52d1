use super::{AddressableHeap, Key};

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
struct Node {
    key: Key,
    child: usize,
    sibling: usize,
    /// Parent when this node is a leftmost child, left sibling otherwise.
    prev: usize,
    present: bool,
}

/// Pairing heap with two-pass delete-min; decrease-key cuts the subtree and
/// melds it with the root in O(1).
#[derive(Debug, Clone)]
pub struct PairingHeap {
    nodes: Vec<Node>,
    root: usize,
    len: usize,
    scratch: Vec<usize>,
}

impl PairingHeap {
    #[inline]
    fn less(&self, a: usize, b: usize) -> bool {
        (self.nodes[a].key, a) < (self.nodes[b].key, b)
    }

    /// Melds two roots, returning the new root.
    fn link(&mut self, a: usize, b: usize) -> usize {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        let (top, sub) = if self.less(a, b) { (a, b) } else { (b, a) };
        let first = self.nodes[top].child;
        self.nodes[sub].sibling = first;
        self.nodes[sub].prev = top;
        if first != NIL {
            self.nodes[first].prev = sub;
        }
        self.nodes[top].child = sub;
        self.nodes[top].sibling = NIL;
        self.nodes[top].prev = NIL;
        top
    }

    fn cut(&mut self, x: usize) {
        let prev = self.nodes[x].prev;
        let next = self.nodes[x].sibling;
        if self.nodes[prev].child == x {
            self.nodes[prev].child = next;
        } else {
            self.nodes[prev].sibling = next;
        }
        if next != NIL {
            self.nodes[next].prev = prev;
        }
        self.nodes[x].sibling = NIL;
        self.nodes[x].prev = NIL;
    }
}

impl AddressableHeap for PairingHeap {
    fn with_items(n: usize) -> Self {
        PairingHeap {
            nodes: vec![
                Node {
                    key: 0,
                    child: NIL,
                    sibling: NIL,
                    prev: NIL,
                    present: false,
                };
                n
            ],
            root: NIL,
            len: 0,
            scratch: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.len
    }

    fn contains(&self, item: usize) -> bool {
        self.nodes[item].present
    }

    fn insert(&mut self, item: usize, key: Key) {
        debug_assert!(!self.contains(item));
        self.nodes[item] = Node {
            key,
            child: NIL,
            sibling: NIL,
            prev: NIL,
            present: true,
        };
        self.len += 1;
        self.root = self.link(self.root, item);
    }

    fn decrease_key(&mut self, item: usize, key: Key) {
        debug_assert!(self.contains(item) && key <= self.nodes[item].key);
        self.nodes[item].key = key;
        if item == self.root {
            return;
        }
        self.cut(item);
        self.root = self.link(self.root, item);
    }

    fn pop_min(&mut self) -> Option<(usize, Key)> {
        if self.root == NIL {
            return None;
        }
        let top = self.root;
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();

        // first pass: pair up children left to right
        let mut c = self.nodes[top].child;
        while c != NIL {
            let a = c;
            let b = self.nodes[a].sibling;
            c = if b == NIL { NIL } else { self.nodes[b].sibling };
            self.nodes[a].sibling = NIL;
            self.nodes[a].prev = NIL;
            if b != NIL {
                self.nodes[b].sibling = NIL;
                self.nodes[b].prev = NIL;
            }
            scratch.push(self.link(a, b));
        }
        // second pass: meld right to left
        let mut root = NIL;
        while let Some(t) = scratch.pop() {
            root = self.link(t, root);
        }
        self.scratch = scratch;
        self.root = root;

        let node = &mut self.nodes[top];
        node.present = false;
        node.child = NIL;
        self.len -= 1;
        Some((top, node.key))
    }
}
