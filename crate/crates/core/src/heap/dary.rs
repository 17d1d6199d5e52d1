use super::{AddressableHeap, Key};

const ABSENT: usize = usize::MAX;

/// Indexed `D`-ary min-heap with a position table for decrease-key.
#[derive(Debug, Clone)]
pub struct DaryHeap<const D: usize> {
    entries: Vec<(Key, usize)>,
    pos: Vec<usize>,
}

impl<const D: usize> DaryHeap<D> {
    #[inline]
    fn place(&mut self, at: usize, entry: (Key, usize)) {
        self.pos[entry.1] = at;
        self.entries[at] = entry;
    }

    fn sift_up(&mut self, mut at: usize) {
        let entry = self.entries[at];
        while at > 0 {
            let parent = (at - 1) / D;
            if self.entries[parent] <= entry {
                break;
            }
            let moved = self.entries[parent];
            self.place(at, moved);
            at = parent;
        }
        self.place(at, entry);
    }

    fn sift_down(&mut self, mut at: usize) {
        let len = self.entries.len();
        let entry = self.entries[at];
        loop {
            let first = at * D + 1;
            if first >= len {
                break;
            }
            let last = (first + D).min(len);
            let mut best = first;
            for c in first + 1..last {
                if self.entries[c] < self.entries[best] {
                    best = c;
                }
            }
            if self.entries[best] >= entry {
                break;
            }
            let moved = self.entries[best];
            self.place(at, moved);
            at = best;
        }
        self.place(at, entry);
    }
}

impl<const D: usize> AddressableHeap for DaryHeap<D> {
    fn with_items(n: usize) -> Self {
        assert!(D >= 2);
        DaryHeap {
            entries: Vec::new(),
            pos: vec![ABSENT; n],
        }
    }

    fn len(&self) -> usize {
        self.entries.len()
    }

    fn contains(&self, item: usize) -> bool {
        self.pos[item] != ABSENT
    }

    fn insert(&mut self, item: usize, key: Key) {
        debug_assert!(!self.contains(item));
        let at = self.entries.len();
        self.entries.push((key, item));
        self.pos[item] = at;
        self.sift_up(at);
    }

    fn decrease_key(&mut self, item: usize, key: Key) {
        let at = self.pos[item];
        debug_assert!(at != ABSENT && key <= self.entries[at].0);
        self.entries[at].0 = key;
        self.sift_up(at);
    }

    fn pop_min(&mut self) -> Option<(usize, Key)> {
        let last = self.entries.pop()?;
        let top = if self.entries.is_empty() {
            last
        } else {
            let top = self.entries[0];
            self.place(0, last);
            self.sift_down(0);
            top
        };
        self.pos[top.1] = ABSENT;
        Some((top.1, top.0))
    }
}
