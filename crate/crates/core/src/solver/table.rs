//! Transposition tables keyed by the pair of claimed-vertex sets.
//!
//! Entries are exact values, so dropping entries never changes a result;
//! when a table reaches its entry cap it is flushed and refilled.

use std::sync::Mutex;

use rustc_hash::FxHashMap;

pub(crate) type Key = u128;

#[inline]
pub(crate) fn key(d: u64, s: u64) -> Key {
    (d as u128) | ((s as u128) << 64)
}

pub(crate) trait Table {
    fn get(&mut self, key: Key) -> Option<u8>;
    fn put(&mut self, key: Key, value: u8);
    fn flushes(&self) -> u64;
}

pub(crate) struct LocalTable {
    map: FxHashMap<Key, u8>,
    cap: usize,
    flushes: u64,
}

impl LocalTable {
    pub(crate) fn new(cap: usize) -> Self {
        LocalTable {
            map: FxHashMap::default(),
            cap: cap.max(1),
            flushes: 0,
        }
    }
}

impl Table for LocalTable {
    #[inline]
    fn get(&mut self, key: Key) -> Option<u8> {
        self.map.get(&key).copied()
    }

    #[inline]
    fn put(&mut self, key: Key, value: u8) {
        if self.map.len() >= self.cap {
            self.map.clear();
            self.flushes += 1;
        }
        self.map.insert(key, value);
    }

    fn flushes(&self) -> u64 {
        self.flushes
    }
}

const SHARDS: usize = 64;

/// Sharded table shared by parallel root workers. Concurrent writers for
/// one key always store the same exact value.
pub(crate) struct SharedTable {
    shards: Vec<Mutex<FxHashMap<Key, u8>>>,
    shard_cap: usize,
}

impl SharedTable {
    pub(crate) fn new(cap: usize) -> Self {
        SharedTable {
            shards: (0..SHARDS)
                .map(|_| Mutex::new(FxHashMap::default()))
                .collect(),
            shard_cap: (cap / SHARDS).max(1),
        }
    }

    #[inline]
    fn shard(&self, key: Key) -> &Mutex<FxHashMap<Key, u8>> {
        // mix both halves so that positions differing only in Staller's set spread out
        let h = (key as u64) ^ ((key >> 64) as u64).rotate_left(29);
        let h = h.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        &self.shards[(h >> 58) as usize % SHARDS]
    }
}

/// Per-worker handle onto a [`SharedTable`].
pub(crate) struct SharedHandle<'a> {
    table: &'a SharedTable,
    flushes: u64,
}

impl<'a> SharedHandle<'a> {
    pub(crate) fn new(table: &'a SharedTable) -> Self {
        SharedHandle { table, flushes: 0 }
    }
}

impl Table for SharedHandle<'_> {
    #[inline]
    fn get(&mut self, key: Key) -> Option<u8> {
        let shard = self
            .table
            .shard(key)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        shard.get(&key).copied()
    }

    #[inline]
    fn put(&mut self, key: Key, value: u8) {
        let mut shard = self
            .table
            .shard(key)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        if shard.len() >= self.table.shard_cap {
            shard.clear();
            self.flushes += 1;
        }
        shard.insert(key, value);
    }

    fn flushes(&self) -> u64 {
        self.flushes
    }
}
