//! Computes volumes through the store, by either generator.

use std::sync::{Arc, Mutex, MutexGuard};

use crate::conerec::{base_case, closed_volume, genus0_lift, genus1_lift};
use crate::error::{Error, Result};
use crate::exactpoly::{is_stable, VolumePoly};
use crate::mirzakhani::{MirzakhaniTable, RecursionOptions, SplitOrder};
use crate::store::{Provenance, StoreEntry, VolumeStore};

/// Anything that can hand out `V_{g,n}`.
pub trait VolumeSource {
    fn volume(&self, g: u32, n: usize) -> Result<Arc<VolumePoly>>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Cone-point lifts from the seeds; genus 0 and 1 only.
    Lift,
    Mirzakhani,
    /// Both, which must agree exactly.
    Both,
}

impl Method {
    /// Lift where it applies, the recursion otherwise.
    pub fn default_for(g: u32) -> Method {
        if g <= 1 {
            Method::Lift
        } else {
            Method::Mirzakhani
        }
    }
}

#[derive(Debug)]
pub struct Engine {
    store: Mutex<VolumeStore>,
    table: Mutex<MirzakhaniTable>,
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|e| e.into_inner())
}

impl Engine {
    pub fn new(store: VolumeStore) -> Self {
        Engine::with_options(store, RecursionOptions::default())
    }

    pub fn with_options(store: VolumeStore, opts: RecursionOptions) -> Self {
        Engine { store: Mutex::new(store), table: Mutex::new(MirzakhaniTable::new(opts)) }
    }

    pub fn in_memory() -> Self {
        Engine::new(VolumeStore::in_memory())
    }

    /// An in-memory engine whose recursion enumerates splits in `order`.
    pub fn with_split_order(order: SplitOrder) -> Self {
        let opts = RecursionOptions { split_order: order, ..RecursionOptions::default() };
        Engine::with_options(VolumeStore::in_memory(), opts)
    }

    pub fn store(&self) -> MutexGuard<'_, VolumeStore> {
        lock(&self.store)
    }

    fn record(&self, v: &VolumePoly, provenance: Provenance) -> Result<()> {
        let mut store = lock(&self.store);
        if store.get_with(v.key(), provenance)?.is_none() {
            store.put(StoreEntry::new(v.clone(), provenance))?;
        }
        Ok(())
    }

    fn lookup(&self, key: (u32, usize), provenances: &[Provenance]) -> Result<Option<VolumePoly>> {
        let store = lock(&self.store);
        for &p in provenances {
            if let Some(e) = store.get_with(key, p)? {
                return Ok(Some(e.poly));
            }
        }
        Ok(None)
    }

    /// `V_{g,n}` by the cone-point lifts, reusing stored lift results.
    pub fn lift_volume(&self, g: u32, n: usize) -> Result<VolumePoly> {
        if !is_stable(g, n) {
            return Err(Error::Unstable { g, n });
        }
        let (start, provenance) = match g {
            0 => (3, Provenance::Genus0Lift),
            1 => (1, Provenance::Genus1Lift),
            _ => return Err(Error::UnsupportedMethod { method: "lift", g }),
        };
        let seed = base_case(g, start).expect("seed exists");
        self.record(&seed, Provenance::Seed)?;
        // Highest stored rung at or below n.
        let mut k = n;
        let mut current = loop {
            if k == start {
                break seed;
            }
            if let Some(v) = self.lookup((g, k), &[provenance])? {
                break v;
            }
            k -= 1;
        };
        while current.boundaries() < n {
            current = if g == 0 { genus0_lift(&current)? } else { genus1_lift(&current)?.0 };
            self.record(&current, provenance)?;
        }
        Ok(current)
    }

    /// `V_{g,n}` by Mirzakhani's recursion.
    pub fn mirzakhani_volume(&self, g: u32, n: usize) -> Result<VolumePoly> {
        if let Some(v) = self.lookup((g, n), &[Provenance::Mirzakhani])? {
            return Ok(v);
        }
        let (v, computed) = {
            let mut table = lock(&self.table);
            (table.volume(g, n)?, table.computed())
        };
        for w in &computed {
            self.record(w, Provenance::Mirzakhani)?;
        }
        Ok(v.as_ref().clone())
    }

    pub fn compute(&self, g: u32, n: usize, method: Method) -> Result<VolumePoly> {
        match method {
            Method::Lift => self.lift_volume(g, n),
            Method::Mirzakhani => self.mirzakhani_volume(g, n),
            Method::Both => {
                let lift = self.lift_volume(g, n)?;
                let rec = self.mirzakhani_volume(g, n)?;
                if lift != rec {
                    let diff = lift.poly().sub(rec.poly())?;
                    return Err(Error::ProvenanceConflict { g, n, diff });
                }
                Ok(lift)
            }
        }
    }

    /// `V_{g,0}` for `g >= 2`, through `V_{g,1}` from the recursion.
    pub fn closed_volume(&self, g: u32) -> Result<VolumePoly> {
        if g < 2 {
            return Err(Error::Precondition(format!("closed volumes need genus >= 2, got {g}")));
        }
        closed_volume(&self.mirzakhani_volume(g, 1)?)
    }
}

impl VolumeSource for Engine {
    fn volume(&self, g: u32, n: usize) -> Result<Arc<VolumePoly>> {
        if let Some(e) = lock(&self.store).get((g, n))? {
            return Ok(Arc::new(e.poly));
        }
        self.compute(g, n, Method::default_for(g)).map(Arc::new)
    }
}
