//! Addressable min-heaps over dense item ids `0..n`.
//!
//! Entries are ordered by `(key, item)`, so equal keys pop in increasing
//! item order and every implementation extracts the same sequence.

mod dary;
mod pairing;

pub use dary::DaryHeap;
pub use pairing::PairingHeap;

pub type Key = i128;

pub trait AddressableHeap {
    /// An empty heap able to hold items `0..n`.
    fn with_items(n: usize) -> Self;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn contains(&self, item: usize) -> bool;

    /// `item` must not be in the heap.
    fn insert(&mut self, item: usize, key: Key);

    /// `item` must be in the heap and `key` must not exceed its current key.
    fn decrease_key(&mut self, item: usize, key: Key);

    fn pop_min(&mut self) -> Option<(usize, Key)>;

    fn push_or_decrease(&mut self, item: usize, key: Key) {
        if self.contains(item) {
            self.decrease_key(item, key);
        } else {
            self.insert(item, key);
        }
    }
}

/// The default heap: a 4-ary indexed heap.
pub type DefaultHeap = DaryHeap<4>;
