//! Independent set and dominating set by dynamic programming over the path
//! decomposition induced by a linear layout.
//!
//! Bag vertices occupy slots. An independent-set state stores one bit per slot;
//! a dominating-set state stores two bits per slot (0 = out and not yet
//! dominated, 1 = in the set, 2 = out and dominated).

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{layout_to_path_decomposition, LinearLayout};

pub const DEFAULT_MEMORY_BUDGET: u64 = 2 * 1024 * 1024 * 1024;
const BYTES_PER_STATE: u64 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpReport {
    pub optimum: usize,
    pub max_live_states: usize,
    pub bag_count: usize,
    pub width_used: usize,
}

const UNDOMINATED: u64 = 0;
const IN_SET: u64 = 1;
const DOMINATED: u64 = 2;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Problem {
    Independent,
    Dominating,
}

impl Problem {
    fn base(self) -> u64 {
        match self {
            Problem::Independent => 2,
            Problem::Dominating => 3,
        }
    }

    fn max_slots(self) -> usize {
        match self {
            Problem::Independent => 64,
            Problem::Dominating => 32,
        }
    }
}

pub fn dp_is(g: &Graph, layout: &LinearLayout) -> Result<DpReport> {
    run(g, layout, Problem::Independent, DEFAULT_MEMORY_BUDGET)
}

pub fn dp_ds(g: &Graph, layout: &LinearLayout) -> Result<DpReport> {
    run(g, layout, Problem::Dominating, DEFAULT_MEMORY_BUDGET)
}

pub fn dp_is_with_budget(g: &Graph, layout: &LinearLayout, budget_bytes: u64) -> Result<DpReport> {
    run(g, layout, Problem::Independent, budget_bytes)
}

pub fn dp_ds_with_budget(g: &Graph, layout: &LinearLayout, budget_bytes: u64) -> Result<DpReport> {
    run(g, layout, Problem::Dominating, budget_bytes)
}

/// `base^(width+1)`, saturating.
pub fn state_ceiling(base: u64, width: usize) -> u64 {
    let mut c: u64 = 1;
    for _ in 0..=width {
        c = c.saturating_mul(base);
    }
    c
}

fn run(g: &Graph, layout: &LinearLayout, problem: Problem, budget_bytes: u64) -> Result<DpReport> {
    let pd = layout_to_path_decomposition(g, layout)?;
    let n = g.vertex_count();
    let width = pd.width;
    let ceiling = state_ceiling(problem.base(), width);
    if width + 1 > problem.max_slots() || ceiling.saturating_mul(BYTES_PER_STATE) > budget_bytes {
        return Err(Error::Resource { width, budget_bytes });
    }

    let reach: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| layout.position(w)).max().unwrap_or(0))
        .collect();
    let mut slot_of = vec![usize::MAX; n];
    let mut free: Vec<usize> = (0..=width).rev().collect();
    let mut live: Vec<usize> = Vec::new();

    let mut table: FxHashMap<u64, u32> = FxHashMap::default();
    table.insert(0, 0);
    let mut max_live = 1usize;

    for i in 0..n {
        let v = layout.vertex_at(i);
        let s = free.pop().expect("bag never exceeds width + 1 slots");
        slot_of[v] = s;
        let nbr_slots: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| slot_of[w] != usize::MAX)
            .map(|&w| slot_of[w])
            .collect();
        table = match problem {
            Problem::Independent => introduce_is(&table, s, &nbr_slots),
            Problem::Dominating => introduce_ds(&table, s, &nbr_slots),
        };
        live.push(v);
        max_live = max_live.max(table.len());
        assert!(
            table.len() as u64 <= ceiling,
            "live states {} exceed the {}^(w+1) ceiling at width {}",
            table.len(),
            problem.base(),
            width
        );

        let (gone, kept): (Vec<usize>, Vec<usize>) = live.iter().partition(|&&u| reach[u] <= i);
        live = kept;
        for u in gone {
            let su = slot_of[u];
            table = match problem {
                Problem::Independent => forget_is(&table, su),
                Problem::Dominating => forget_ds(&table, su),
            };
            slot_of[u] = usize::MAX;
            free.push(su);
        }
    }

    let optimum = *table.get(&0).expect("the empty bag keeps a feasible state") as usize;
    Ok(DpReport { optimum, max_live_states: max_live, bag_count: pd.bags.len(), width_used: width })
}

fn keep_max(t: &mut FxHashMap<u64, u32>, key: u64, val: u32) {
    let e = t.entry(key).or_insert(val);
    if *e < val {
        *e = val;
    }
}

fn keep_min(t: &mut FxHashMap<u64, u32>, key: u64, val: u32) {
    let e = t.entry(key).or_insert(val);
    if *e > val {
        *e = val;
    }
}

fn introduce_is(table: &FxHashMap<u64, u32>, s: usize, nbr_slots: &[usize]) -> FxHashMap<u64, u32> {
    let nmask: u64 = nbr_slots.iter().map(|&j| 1u64 << j).sum();
    let mut out = FxHashMap::with_capacity_and_hasher(table.len() * 2, Default::default());
    for (&key, &val) in table {
        keep_max(&mut out, key, val);
        if key & nmask == 0 {
            keep_max(&mut out, key | (1 << s), val + 1);
        }
    }
    out
}

fn forget_is(table: &FxHashMap<u64, u32>, s: usize) -> FxHashMap<u64, u32> {
    let mut out = FxHashMap::with_capacity_and_hasher(table.len(), Default::default());
    for (&key, &val) in table {
        keep_max(&mut out, key & !(1 << s), val);
    }
    out
}

fn state(key: u64, slot: usize) -> u64 {
    (key >> (2 * slot)) & 3
}

fn with_state(key: u64, slot: usize, st: u64) -> u64 {
    (key & !(3 << (2 * slot))) | (st << (2 * slot))
}

fn introduce_ds(table: &FxHashMap<u64, u32>, s: usize, nbr_slots: &[usize]) -> FxHashMap<u64, u32> {
    let mut out = FxHashMap::with_capacity_and_hasher(table.len() * 2, Default::default());
    for (&key, &val) in table {
        let mut taken = with_state(key, s, IN_SET);
        for &j in nbr_slots {
            if state(key, j) == UNDOMINATED {
                taken = with_state(taken, j, DOMINATED);
            }
        }
        keep_min(&mut out, taken, val + 1);

        let seen = nbr_slots.iter().any(|&j| state(key, j) == IN_SET);
        let skipped = with_state(key, s, if seen { DOMINATED } else { UNDOMINATED });
        keep_min(&mut out, skipped, val);
    }
    out
}

fn forget_ds(table: &FxHashMap<u64, u32>, s: usize) -> FxHashMap<u64, u32> {
    let mut out = FxHashMap::with_capacity_and_hasher(table.len(), Default::default());
    for (&key, &val) in table {
        if state(key, s) == UNDOMINATED {
            continue;
        }
        keep_min(&mut out, with_state(key, s, 0), val);
    }
    out
}
