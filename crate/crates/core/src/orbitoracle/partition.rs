use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::points::{borel_generator_list, check_budget, BorelGen, PointSpace};
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::matchgraph::{count_matchings, enumerate_matchings, GraphSpec, Matching};
use crate::quiverrep::{binary_matrix, Classifier, VarietyPoint};

/// Sampling parameters for the within-orbit tag check.
#[derive(Clone, Copy, Debug)]
pub struct TagCheck {
    pub seed: u64,
    pub samples: usize,
}

impl Default for TagCheck {
    fn default() -> Self {
        TagCheck { seed: 0, samples: 25 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub id: usize,
    pub size: usize,
    /// Least packed key in the orbit.
    pub representative: u128,
    /// Matching on the plain corona `C_{m+n}`.
    pub tag: Matching,
}

/// Borel orbits on `X(F_q)`, numbered by least point key.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    space: PointSpace,
    keys: Vec<u128>,
    index: FxHashMap<u128, u32>,
    orbit_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    orbits: Vec<Orbit>,
}

impl OrbitTable {
    pub fn space(&self) -> &PointSpace {
        &self.space
    }
    pub fn m(&self) -> usize {
        self.space.m()
    }
    pub fn n(&self) -> usize {
        self.space.n()
    }
    pub fn field(&self) -> PrimeField {
        self.space.field()
    }
    pub fn total_points(&self) -> usize {
        self.keys.len()
    }
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }
    pub fn keys(&self) -> &[u128] {
        &self.keys
    }

    /// Point indices (into [`OrbitTable::keys`]) of orbit `id`.
    pub fn members(&self, id: usize) -> &[u32] {
        &self.members[id]
    }

    pub fn orbit_of_key(&self, key: u128) -> Option<usize> {
        self.index.get(&key).map(|&i| self.orbit_of[i as usize] as usize)
    }

    pub fn orbit_of_point(&self, pt: &VarietyPoint) -> Result<Option<usize>> {
        Ok(self.orbit_of_key(self.space.key_of(pt)?))
    }

    pub fn representative_point(&self, id: usize) -> VarietyPoint {
        self.space.point(self.orbits[id].representative)
    }

    pub fn orbit_with_tag(&self, tag: &Matching) -> Option<usize> {
        self.orbits.iter().position(|o| &o.tag == tag)
    }
}

/// Partitions `keys` into orbits of the group generated by `gens` by BFS,
/// then tags each orbit by classifying its least point and re-checks the tag
/// on up to `check.samples` members.
pub fn orbit_partition(space: PointSpace, keys: Vec<u128>, gens: &[BorelGen], check: TagCheck) -> Result<OrbitTable> {
    let d = space.d();
    let field = space.field();
    let mut index = FxHashMap::with_capacity_and_hasher(keys.len(), Default::default());
    for (i, &k) in keys.iter().enumerate() {
        if index.insert(k, i as u32).is_some() {
            return Err(Error::Invalid("duplicate point key".into()));
        }
    }
    const UNSEEN: u32 = u32::MAX;
    let mut raw = vec![UNSEEN; keys.len()];
    let mut raw_count = 0u32;
    let mut queue = Vec::new();
    let mut base = vec![0u8; d * d];
    let mut buf = vec![0u8; d * d];
    for start in 0..keys.len() {
        if raw[start] != UNSEEN {
            continue;
        }
        raw[start] = raw_count;
        queue.push(start as u32);
        while let Some(i) = queue.pop() {
            space.unpack(keys[i as usize], &mut base);
            for g in gens {
                buf.copy_from_slice(&base);
                g.apply(field, &mut buf, d);
                space.normalize(&mut buf);
                let key = space.pack(&buf);
                let &j = index.get(&key).ok_or_else(|| Error::Invalid("generator left the point set".into()))?;
                if raw[j as usize] == UNSEEN {
                    raw[j as usize] = raw_count;
                    queue.push(j);
                }
            }
        }
        raw_count += 1;
    }

    let mut least = vec![u128::MAX; raw_count as usize];
    let mut sizes = vec![0usize; raw_count as usize];
    for (i, &o) in raw.iter().enumerate() {
        least[o as usize] = least[o as usize].min(keys[i]);
        sizes[o as usize] += 1;
    }
    let mut order: Vec<u32> = (0..raw_count).collect();
    order.sort_by_key(|&o| least[o as usize]);
    let mut rename = vec![0u32; raw_count as usize];
    for (new, &old) in order.iter().enumerate() {
        rename[old as usize] = new as u32;
    }
    let orbit_of: Vec<u32> = raw.iter().map(|&o| rename[o as usize]).collect();
    let mut members: Vec<Vec<u32>> = order.iter().map(|&o| Vec::with_capacity(sizes[o as usize])).collect();
    for (i, &o) in orbit_of.iter().enumerate() {
        members[o as usize].push(i as u32);
    }

    let classifier = Classifier::shared(space.m(), space.n(), field)?;
    let orbits = members
        .par_iter()
        .enumerate()
        .map(|(id, mem)| {
            let representative = order.get(id).map(|&o| least[o as usize]).expect("orbit");
            let tag = classifier.classify_point(&space.point(representative))?;
            let mut rng = ChaCha8Rng::seed_from_u64(check.seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let sample: Vec<u32> = if mem.len() <= check.samples {
                mem.clone()
            } else {
                mem.choose_multiple(&mut rng, check.samples).copied().collect()
            };
            for i in sample {
                if classifier.classify_point(&space.point(keys[i as usize]))? != tag {
                    return Err(Error::TagDisagreement { orbit: id });
                }
            }
            Ok(Orbit { id, size: mem.len(), representative, tag })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(OrbitTable { space, keys, index, orbit_of, members, orbits })
}

/// Enumerates `X(F_q)` within `budget` and partitions it into Borel orbits.
pub fn build_orbit_table(m: usize, n: usize, field: PrimeField, budget: u128, check: TagCheck) -> Result<OrbitTable> {
    check_budget(m, n, field, budget)?;
    let space = PointSpace::new(m, n, field)?;
    orbit_partition(space, space.keys(), &borel_generator_list(m + n, field), check)
}

/// Orbit census of one configuration against the matching count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub m: usize,
    pub n: usize,
    pub q: u8,
    pub total_points: usize,
    pub orbit_count: usize,
    #[serde(serialize_with = "crate::serialize_display")]
    pub expected_count: BigUint,
    pub tags_distinct: bool,
    pub tags_cover: bool,
    /// `(tag, orbit size)` in orbit-id order.
    pub sizes: Vec<(String, usize)>,
}

impl CensusReport {
    pub fn matches(&self) -> bool {
        self.tags_distinct && self.tags_cover && BigUint::from(self.orbit_count) == self.expected_count
    }
}

pub fn census_of(table: &OrbitTable) -> CensusReport {
    let (m, n) = (table.m(), table.n());
    let tags: BTreeSet<&Matching> = table.orbits().iter().map(|o| &o.tag).collect();
    let all: BTreeSet<Matching> = enumerate_matchings(GraphSpec::plain(m + n), m).collect();
    CensusReport {
        m,
        n,
        q: table.field().q(),
        total_points: table.total_points(),
        orbit_count: table.orbit_count(),
        expected_count: count_matchings(GraphSpec::plain(m + n), m),
        tags_distinct: tags.len() == table.orbit_count(),
        tags_cover: tags.len() == all.len() && all.iter().all(|s| tags.contains(s)),
        sizes: table.orbits().iter().map(|o| (o.tag.to_string(), o.size)).collect(),
    }
}

pub fn census(m: usize, n: usize, field: PrimeField, budget: u128) -> Result<CensusReport> {
    Ok(census_of(&build_orbit_table(m, n, field, budget, TagCheck::default())?))
}

/// Orbit ids whose tag's binary representative does not land back in them.
pub fn misplaced_representatives(table: &OrbitTable) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    for o in table.orbits() {
        let (g, slots) = binary_matrix(&o.tag, table.field())?;
        let pt = VarietyPoint::from_group_element(&g, &slots)?;
        if table.orbit_of_point(&pt)? != Some(o.id) {
            bad.push(o.id);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchgraph::Edge;

    const F2: PrimeField = PrimeField::F2;
    const F3: PrimeField = PrimeField::F3;

    fn table(m: usize, n: usize, f: PrimeField) -> OrbitTable {
        build_orbit_table(m, n, f, 1_000_000, TagCheck::default()).unwrap()
    }

    #[test]
    fn smallest_configuration() {
        let t = table(1, 1, F2);
        assert_eq!(t.total_points(), 6);
        assert_eq!(t.orbits().iter().map(|o| o.size).collect::<Vec<_>>(), vec![2, 2, 2]);
        let spec = GraphSpec::plain(2);
        let expected: BTreeSet<Matching> = [Edge::pendant(1), Edge::pendant(2), Edge::internal(1, 2, 1)]
            .into_iter()
            .map(|e| Matching::new(spec, [e]).unwrap())
            .collect();
        let got: BTreeSet<Matching> = t.orbits().iter().map(|o| o.tag.clone()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn small_censuses() {
        for (m, n, f, count) in [(1, 2, F2, 6), (1, 2, F3, 6), (2, 2, F2, 21), (2, 1, F3, 6), (0, 3, F2, 1), (3, 0, F3, 1)] {
            let r = census(m, n, f, 1_000_000).unwrap();
            assert_eq!(r.orbit_count, count, "({m},{n},{})", f.q());
            assert!(r.matches());
            assert_eq!(r.sizes.iter().map(|s| s.1).sum::<usize>(), r.total_points);
        }
    }

    #[test]
    fn ids_follow_least_keys() {
        let t = table(2, 2, F2);
        let reps: Vec<u128> = t.orbits().iter().map(|o| o.representative).collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        for o in t.orbits() {
            let least = t.members(o.id).iter().map(|&i| t.keys()[i as usize]).min().unwrap();
            assert_eq!(least, o.representative);
            assert_eq!(t.orbit_of_key(least), Some(o.id));
        }
    }

    #[test]
    fn representatives_land_in_their_orbits() {
        for (m, n, f) in [(1, 1, F3), (2, 2, F2), (1, 3, F3)] {
            assert!(misplaced_representatives(&table(m, n, f)).unwrap().is_empty());
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let a = census(2, 2, F3, 1_000_000).unwrap();
        let b = census(2, 2, F3, 1_000_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total_points, 10530);
    }
}
