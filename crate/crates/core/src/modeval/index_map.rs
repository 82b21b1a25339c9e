use std::collections::BTreeMap;

/// Ordered map from indices in `[0, universe)` to values, with the
/// operations of a van Emde Boas tree: insert, search, extract-min.
///
/// Backed by a balanced search tree, so each operation costs `O(log size)`.
#[derive(Clone, Debug)]
pub struct SparseIndexMap<V> {
    universe: u64,
    map: BTreeMap<u64, V>,
}

impl<V> SparseIndexMap<V> {
    pub fn new(universe: u64) -> Self {
        Self { universe, map: BTreeMap::new() }
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Inserts or replaces the value at `key`.
    ///
    /// # Panics
    /// If `key` lies outside the universe.
    pub fn insert(&mut self, key: u64, value: V) -> Option<V> {
        assert!(key < self.universe, "key {key} outside universe {}", self.universe);
        self.map.insert(key, value)
    }

    pub fn search(&self, key: u64) -> Option<&V> {
        self.map.get(&key)
    }

    pub fn search_mut(&mut self, key: u64) -> Option<&mut V> {
        self.map.get_mut(&key)
    }

    pub fn remove(&mut self, key: u64) -> Option<V> {
        self.map.remove(&key)
    }

    pub fn min_key(&self) -> Option<u64> {
        self.map.first_key_value().map(|(k, _)| *k)
    }

    pub fn extract_min(&mut self) -> Option<(u64, V)> {
        self.map.pop_first()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extract_in_order() {
        let mut m = SparseIndexMap::new(100);
        for k in [42, 7, 99, 0, 13] {
            m.insert(k, k * 2);
        }
        assert_eq!(m.search(13), Some(&26));
        assert_eq!(m.search(14), None);
        *m.search_mut(7).unwrap() += 1;
        assert_eq!(m.remove(42), Some(84));
        let keys: Vec<(u64, u64)> = std::iter::from_fn(|| m.extract_min()).collect();
        assert_eq!(keys, vec![(0, 0), (7, 15), (13, 26), (99, 198)]);
        assert!(m.is_empty());
    }

    #[test]
    #[should_panic]
    fn rejects_out_of_universe() {
        SparseIndexMap::new(10).insert(10, ());
    }
}
