//! CNF data model: literals, clauses, formulas, assignments and the
//! clause/formula evaluation primitives everything else is built on.
//!
//! Literals use the DIMACS signed-integer convention end-to-end: a positive
//! integer asserts the variable, a negative integer asserts its negation,
//! and variable indices are 1-based.

use std::fmt;

/// 1-based variable index.
pub type Var = u32;

/// A signed DIMACS literal. The encoded value is never zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    /// Wraps a raw DIMACS integer. Panics on zero, which is the clause
    /// terminator and never a literal.
    pub fn new(encoded: i32) -> Self {
        assert!(encoded != 0, "literal encoding 0 is reserved");
        Literal(encoded)
    }

    pub fn encoded(self) -> i32 {
        self.0
    }

    pub fn var(self) -> Var {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// The truth value this literal forces on its variable when the literal
    /// itself must hold.
    pub fn forced_value(self) -> bool {
        self.is_positive()
    }

    pub fn negated(self) -> Self {
        Literal(-self.0)
    }
}

impl std::ops::Neg for Literal {
    type Output = Literal;
    fn neg(self) -> Literal {
        self.negated()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A disjunction of literals. Clauses coming out of the parser are
/// deduplicated and non-tautological; hand-built clauses should be too.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    pub fn new(lits: Vec<Literal>) -> Self {
        Clause { lits }
    }

    /// Convenience constructor from raw DIMACS integers.
    pub fn from_encoded(lits: &[i32]) -> Self {
        Clause {
            lits: lits.iter().map(|&l| Literal::new(l)).collect(),
        }
    }

    pub fn lits(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Literal> {
        self.lits.iter()
    }

    /// Number of distinct variables in the clause. Equals `len()` for
    /// deduplicated clauses.
    pub fn distinct_vars(&self) -> usize {
        let mut vars: Vec<Var> = self.lits.iter().map(|l| l.var()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars.len()
    }
}

/// A CNF formula. Clause order is preserved exactly as parsed; the greedy
/// partitioner is order-sensitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Formula {
    num_vars: Var,
    clauses: Vec<Clause>,
    /// Set when the input contained an empty clause. Such a formula is
    /// unsatisfiable under any assignment; the empty clause itself is not
    /// kept in `clauses`.
    trivially_unsat: bool,
}

impl Formula {
    pub fn new(num_vars: Var, clauses: Vec<Clause>) -> Self {
        Formula {
            num_vars,
            clauses,
            trivially_unsat: false,
        }
    }

    pub fn with_empty_clause(mut self) -> Self {
        self.trivially_unsat = true;
        self
    }

    pub fn num_vars(&self) -> Var {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn trivially_unsat(&self) -> bool {
        self.trivially_unsat
    }
}

/// Tri-state assignment for every variable of a formula.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Assignment {
    values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn new(num_vars: Var) -> Self {
        Assignment {
            values: vec![None; num_vars as usize],
        }
    }

    pub fn num_vars(&self) -> Var {
        self.values.len() as Var
    }

    pub fn value(&self, var: Var) -> Option<bool> {
        self.values[var as usize - 1]
    }

    pub fn is_assigned(&self, var: Var) -> bool {
        self.value(var).is_some()
    }

    /// Truth value of a literal under this assignment, `None` if free.
    pub fn lit_value(&self, lit: Literal) -> Option<bool> {
        self.value(lit.var()).map(|v| v == lit.is_positive())
    }

    /// Makes `lit` true.
    pub fn assign(&mut self, lit: Literal) {
        self.values[lit.var() as usize - 1] = Some(lit.forced_value());
    }

    pub fn unassign(&mut self, var: Var) {
        self.values[var as usize - 1] = None;
    }

    pub fn assigned_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    /// Literals of all currently assigned variables, in variable order.
    pub fn assigned_literals(&self) -> impl Iterator<Item = Literal> + '_ {
        self.values.iter().enumerate().filter_map(|(i, v)| {
            v.map(|value| {
                let var = (i + 1) as i32;
                Literal::new(if value { var } else { -var })
            })
        })
    }
}

/// Status of one clause under an assignment.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClauseStatus {
    Satisfied,
    Falsified,
    /// Exactly one literal free, all others false; carries the free literal.
    Unit(Literal),
    /// Two or more literals free, none true; carries the free count.
    Unresolved(usize),
}

/// Classifies `clause` under `assignment`. The four tags are exhaustive and
/// mutually exclusive.
pub fn clause_status(clause: &Clause, assignment: &Assignment) -> ClauseStatus {
    let mut free = 0usize;
    let mut last_free = None;
    for &lit in clause.iter() {
        match assignment.lit_value(lit) {
            Some(true) => return ClauseStatus::Satisfied,
            Some(false) => {}
            None => {
                free += 1;
                last_free = Some(lit);
            }
        }
    }
    match free {
        0 => ClauseStatus::Falsified,
        1 => ClauseStatus::Unit(last_free.unwrap()),
        n => ClauseStatus::Unresolved(n),
    }
}

/// Status of a whole formula under an assignment.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormulaStatus {
    Satisfied,
    Falsified,
    Undetermined,
}

/// Satisfied iff every clause is satisfied; falsified iff at least one
/// clause is falsified (an empty input clause counts); undetermined
/// otherwise.
pub fn evaluate(formula: &Formula, assignment: &Assignment) -> FormulaStatus {
    if formula.trivially_unsat() {
        return FormulaStatus::Falsified;
    }
    let mut all_satisfied = true;
    for clause in formula.clauses() {
        match clause_status(clause, assignment) {
            ClauseStatus::Satisfied => {}
            ClauseStatus::Falsified => return FormulaStatus::Falsified,
            _ => all_satisfied = false,
        }
    }
    if all_satisfied {
        FormulaStatus::Satisfied
    } else {
        FormulaStatus::Undetermined
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assignment_from(num_vars: Var, lits: &[i32]) -> Assignment {
        let mut a = Assignment::new(num_vars);
        for &l in lits {
            a.assign(Literal::new(l));
        }
        a
    }

    /// The four clauses of the worked example, a..f = 1..6.
    pub(crate) fn example_formula() -> Formula {
        Formula::new(
            6,
            vec![
                Clause::from_encoded(&[-1, 2, -3]),
                Clause::from_encoded(&[1, -2, -3]),
                Clause::from_encoded(&[-4, 5, 6]),
                Clause::from_encoded(&[4, 5, 6]),
            ],
        )
    }

    #[test]
    fn literal_basics() {
        let l = Literal::new(-3);
        assert_eq!(l.var(), 3);
        assert!(!l.is_positive());
        assert_eq!((-l).encoded(), 3);
        assert_eq!(l.to_string(), "-3");
    }

    #[test]
    #[should_panic]
    fn literal_zero_rejected() {
        Literal::new(0);
    }

    #[test]
    fn clause_unit_when_all_but_one_false() {
        // clause 1 of the example under a=T, c=T: b is the single free literal
        let clause = Clause::from_encoded(&[-1, 2, -3]);
        let a = assignment_from(3, &[1, 3]);
        assert_eq!(clause_status(&clause, &a), ClauseStatus::Unit(Literal::new(2)));
    }

    #[test]
    fn clause_unresolved_with_no_assignments() {
        let clause = Clause::from_encoded(&[1, -2]);
        let a = Assignment::new(2);
        assert_eq!(clause_status(&clause, &a), ClauseStatus::Unresolved(2));
    }

    #[test]
    fn clause_falsified_when_all_false() {
        let clause = Clause::from_encoded(&[1, 2]);
        let a = assignment_from(2, &[-1, -2]);
        assert_eq!(clause_status(&clause, &a), ClauseStatus::Falsified);
    }

    #[test]
    fn evaluate_example_with_c_false_e_true() {
        // c=F satisfies clauses 1 and 2, e=T satisfies clauses 3 and 4.
        let f = example_formula();
        let a = assignment_from(6, &[-3, 5]);
        assert_eq!(evaluate(&f, &a), FormulaStatus::Satisfied);
    }

    #[test]
    fn evaluate_example_unassigned_is_undetermined() {
        let f = example_formula();
        let a = Assignment::new(6);
        assert_eq!(evaluate(&f, &a), FormulaStatus::Undetermined);
    }

    #[test]
    fn evaluate_falsified_when_any_clause_false() {
        let f = Formula::new(
            1,
            vec![Clause::from_encoded(&[1]), Clause::from_encoded(&[-1])],
        );
        let a = assignment_from(1, &[1]);
        assert_eq!(evaluate(&f, &a), FormulaStatus::Falsified);
    }

    #[test]
    fn evaluate_trivially_unsat_is_falsified() {
        let f = Formula::new(2, vec![Clause::from_encoded(&[1, 2])]).with_empty_clause();
        assert_eq!(evaluate(&f, &Assignment::new(2)), FormulaStatus::Falsified);
    }

    #[test]
    fn assigned_literals_in_variable_order() {
        let a = assignment_from(4, &[3, -1]);
        let lits: Vec<i32> = a.assigned_literals().map(|l| l.encoded()).collect();
        assert_eq!(lits, vec![-1, 3]);
    }
}
