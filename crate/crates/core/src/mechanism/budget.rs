//! Sequential-composition budget accounting for one dataset.
//!
//! Spending is an atomic check-and-debit: the ledger holds its state behind a
//! mutex, so concurrent callers can never jointly overspend.

use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// Absorbs rounding when many fractional epsilons add up to the limit.
const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PrivacyBudget {
    pub epsilon: f64,
    pub delta: f64,
}

impl PrivacyBudget {
    pub fn new(epsilon: f64, delta: f64) -> Result<Self> {
        if !(epsilon >= 0.0 && epsilon.is_finite()) || !(0.0..1.0).contains(&delta) {
            return Err(Error::InvalidParameter(format!(
                "budget needs epsilon ≥ 0 and delta in [0, 1), got ({epsilon}, {delta})"
            )));
        }
        Ok(PrivacyBudget { epsilon, delta })
    }

    fn plus(self, other: PrivacyBudget) -> PrivacyBudget {
        PrivacyBudget { epsilon: self.epsilon + other.epsilon, delta: self.delta + other.delta }
    }

    fn fits_within(self, limit: PrivacyBudget) -> bool {
        self.epsilon <= limit.epsilon + SLACK && self.delta <= limit.delta + SLACK * limit.delta.max(1e-300)
    }
}

/// Basic composition: epsilons and deltas add.
pub fn compose(costs: impl IntoIterator<Item = PrivacyBudget>) -> PrivacyBudget {
    costs.into_iter().fold(PrivacyBudget::default(), PrivacyBudget::plus)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query_id: Option<String>,
    pub epsilon: f64,
    pub delta: f64,
}

/// Persisted form of a [`BudgetLedger`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerState {
    pub dataset: String,
    pub limit: PrivacyBudget,
    pub spent: PrivacyBudget,
    pub entries: Vec<LedgerEntry>,
}

#[derive(Debug)]
pub struct BudgetLedger {
    dataset: String,
    limit: PrivacyBudget,
    inner: Mutex<(PrivacyBudget, Vec<LedgerEntry>)>,
}

impl BudgetLedger {
    pub fn new(dataset: impl Into<String>, limit: PrivacyBudget) -> Self {
        BudgetLedger { dataset: dataset.into(), limit, inner: Mutex::new((PrivacyBudget::default(), Vec::new())) }
    }

    pub fn from_state(state: LedgerState) -> Result<Self> {
        let recomputed = compose(state.entries.iter().map(|e| PrivacyBudget { epsilon: e.epsilon, delta: e.delta }));
        if (recomputed.epsilon - state.spent.epsilon).abs() > 1e-9
            || (recomputed.delta - state.spent.delta).abs() > 1e-12
        {
            return Err(Error::InvalidParameter("budget ledger totals disagree with its entries".into()));
        }
        Ok(BudgetLedger { dataset: state.dataset, limit: state.limit, inner: Mutex::new((state.spent, state.entries)) })
    }

    pub fn state(&self) -> LedgerState {
        let guard = self.inner.lock().expect("ledger lock poisoned");
        LedgerState { dataset: self.dataset.clone(), limit: self.limit, spent: guard.0, entries: guard.1.clone() }
    }

    pub fn dataset(&self) -> &str {
        &self.dataset
    }

    pub fn limit(&self) -> PrivacyBudget {
        self.limit
    }

    pub fn spent(&self) -> PrivacyBudget {
        self.inner.lock().expect("ledger lock poisoned").0
    }

    pub fn remaining(&self) -> PrivacyBudget {
        let spent = self.spent();
        PrivacyBudget {
            epsilon: (self.limit.epsilon - spent.epsilon).max(0.0),
            delta: (self.limit.delta - spent.delta).max(0.0),
        }
    }

    /// Debits `cost` if it fits in the remaining budget; returns the new
    /// cumulative spend.
    pub fn charge(&self, cost: PrivacyBudget, query_id: Option<&str>) -> Result<PrivacyBudget> {
        let mut guard = self.inner.lock().expect("ledger lock poisoned");
        let next = guard.0.plus(cost);
        if !next.fits_within(self.limit) {
            return Err(Error::BudgetExhausted {
                requested_epsilon: cost.epsilon,
                requested_delta: cost.delta,
                remaining_epsilon: (self.limit.epsilon - guard.0.epsilon).max(0.0),
                remaining_delta: (self.limit.delta - guard.0.delta).max(0.0),
            });
        }
        guard.0 = next;
        guard.1.push(LedgerEntry { query_id: query_id.map(str::to_owned), epsilon: cost.epsilon, delta: cost.delta });
        Ok(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn b(e: f64, d: f64) -> PrivacyBudget {
        PrivacyBudget::new(e, d).unwrap()
    }

    #[test]
    fn composition() {
        assert_eq!(compose([b(1.0, 0.0), b(1.0, 0.0)]), b(2.0, 0.0));
        let c = compose([b(0.5, 1e-6), b(0.5, 1e-6)]);
        assert!((c.epsilon - 1.0).abs() < 1e-15 && (c.delta - 2e-6).abs() < 1e-18);
    }

    #[test]
    fn refuses_after_exhaustion() {
        let ledger = BudgetLedger::new("g", b(1.0, 0.0));
        ledger.charge(b(1.0, 0.0), Some("q1")).unwrap();
        let err = ledger.charge(b(0.1, 0.0), Some("q2")).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { .. }));
        assert_eq!(ledger.state().entries.len(), 1);
        assert!(ledger.charge(b(0.0, 1e-9), None).is_err());
    }

    #[test]
    fn fractional_spends_reach_the_limit() {
        let ledger = BudgetLedger::new("g", b(1.0, 0.0));
        for _ in 0..10 {
            ledger.charge(b(0.1, 0.0), None).unwrap();
        }
        assert!(ledger.charge(b(0.01, 0.0), None).is_err());
    }

    #[test]
    fn state_round_trip() {
        let ledger = BudgetLedger::new("graph.txt", b(2.0, 1e-5));
        ledger.charge(b(0.5, 1e-6), Some("a")).unwrap();
        let json = serde_json::to_string(&ledger.state()).unwrap();
        let back = BudgetLedger::from_state(serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.spent(), ledger.spent());
        assert_eq!(back.remaining().epsilon, 1.5);

        let mut bad = ledger.state();
        bad.spent.epsilon = 0.0;
        assert!(BudgetLedger::from_state(bad).is_err());
    }

    #[test]
    fn concurrent_spends_never_overshoot() {
        let ledger = Arc::new(BudgetLedger::new("g", b(5.0, 0.0)));
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let l = Arc::clone(&ledger);
                std::thread::spawn(move || (0..10).filter(|_| l.charge(b(0.25, 0.0), None).is_ok()).count())
            })
            .collect();
        let granted: usize = handles.into_iter().map(|h| h.join().unwrap()).sum();
        assert_eq!(granted, 20);
        assert!((ledger.spent().epsilon - 5.0).abs() < 1e-12);
    }
}
