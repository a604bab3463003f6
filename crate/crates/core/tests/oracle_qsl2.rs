//! k[SL_q(2)] against a word-rewriting model that sorts adjacent pairs one at a
//! time and removes a…d by the macro step a·bʲcᵏ·d = q^{-(j+k)}bʲcᵏ(1 + q⁻¹bc).

use std::collections::BTreeMap;

use hopfkit::qsl2::{Generator, PbwMonomial, QslElement, QslTensor, Qsl2};
use hopfkit::scalar::{FieldSpec, Scalar};

type Word = Vec<u8>;
type Combo = BTreeMap<Word, Scalar>;

struct Model {
    one: Scalar,
    q: Scalar,
    q_inv: Scalar,
}

impl Model {
    fn new() -> Self {
        let f = FieldSpec::rational_functions();
        let q = f.generator().unwrap();
        Model { one: f.one(), q_inv: q.inv().unwrap(), q }
    }

    fn qp(&self, e: i64) -> Scalar {
        self.q.pow(e).unwrap()
    }

    fn add(into: &mut Combo, w: Word, c: Scalar) {
        let v = into.remove(&w).map_or(c.clone(), |old| &old + &c);
        if !v.is_zero() {
            into.insert(w, v);
        }
    }

    /// One rewrite step on a word, or `None` if it is already normal.
    fn step(&self, w: &[u8]) -> Option<Vec<(Word, Scalar)>> {
        for p in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[p], w[p + 1]);
            if x <= y {
                continue;
            }
            let splice = |mid: &[u8]| [&w[..p], mid, &w[p + 2..]].concat();
            return Some(match (x, y) {
                (b'b', b'a') | (b'c', b'a') | (b'd', b'b') | (b'd', b'c') => {
                    vec![(splice(&[y, x]), self.q.clone())]
                }
                (b'c', b'b') => vec![(splice(b"bc"), self.one.clone())],
                (b'd', b'a') => vec![(splice(b""), self.one.clone()), (splice(b"bc"), self.q.clone())],
                _ => unreachable!(),
            });
        }
        // Sorted: aⁱbʲcᵏdˡ. Reduce the last a against the first d.
        let last_a = w.iter().rposition(|&g| g == b'a')?;
        let first_d = w.iter().position(|&g| g == b'd')?;
        let middle = &w[last_a + 1..first_d];
        let s = self.qp(-(middle.len() as i64));
        let head = &w[..last_a];
        let tail = &w[first_d + 1..];
        Some(vec![
            ([head, middle, tail].concat(), s.clone()),
            ([head, middle, b"bc", tail].concat(), &s * &self.q_inv),
        ])
    }

    fn normalize(&self, input: Combo) -> Combo {
        let mut todo = input;
        let mut done = Combo::new();
        while let Some((w, c)) = todo.pop_first() {
            match self.step(&w) {
                None => Self::add(&mut done, w, c),
                Some(terms) => {
                    for (v, s) in terms {
                        Self::add(&mut todo, v, &c * &s);
                    }
                }
            }
        }
        done
    }

    fn word(&self, w: &[u8]) -> Combo {
        self.normalize(Combo::from([(w.to_vec(), self.one.clone())]))
    }

    fn mul(&self, x: &Combo, y: &Combo) -> Combo {
        let mut out = Combo::new();
        for (u, a) in x {
            for (v, b) in y {
                Self::add(&mut out, [u.as_slice(), v].concat(), a * b);
            }
        }
        self.normalize(out)
    }

    /// Δ on a word as the product of the generator coproducts in H ⊗ H.
    fn comul(&self, w: &[u8]) -> BTreeMap<(Word, Word), Scalar> {
        let gen = |g: u8| -> Vec<(&'static [u8], &'static [u8])> {
            match g {
                b'a' => vec![(b"a", b"a"), (b"b", b"c")],
                b'b' => vec![(b"a", b"b"), (b"b", b"d")],
                b'c' => vec![(b"c", b"a"), (b"d", b"c")],
                b'd' => vec![(b"c", b"b"), (b"d", b"d")],
                _ => unreachable!(),
            }
        };
        let mut acc: BTreeMap<(Word, Word), Scalar> = BTreeMap::from([((vec![], vec![]), self.one.clone())]);
        for &g in w {
            let mut next = BTreeMap::new();
            for ((l, r), c) in &acc {
                for (x, y) in gen(g) {
                    let key = ([l.as_slice(), x].concat(), [r.as_slice(), y].concat());
                    let v = next.remove(&key).map_or(c.clone(), |o: Scalar| &o + c);
                    next.insert(key, v);
                }
            }
            acc = next;
        }
        let mut out = BTreeMap::new();
        for ((l, r), c) in acc {
            for (u, a) in self.word(&l) {
                for (v, b) in self.word(&r) {
                    let key = (u.clone(), v);
                    let val = &(&c * &a) * &b;
                    let val = out.remove(&key).map_or(val.clone(), |o: Scalar| &o + &val);
                    if val.is_zero() {
                        out.remove(&key);
                    } else {
                        out.insert(key, val);
                    }
                }
            }
        }
        out
    }

    /// S or S⁻¹ on a word: reverse it and map each generator.
    fn antipode(&self, w: &[u8], inverse: bool) -> Combo {
        let img = |g: u8| -> (u8, Scalar) {
            let m = &-&self.one;
            match (g, inverse) {
                (b'a', _) => (b'd', self.one.clone()),
                (b'd', _) => (b'a', self.one.clone()),
                (b'b', false) | (b'c', true) => (g, m * &self.q),
                (b'c', false) | (b'b', true) => (g, m * &self.q_inv),
                _ => unreachable!(),
            }
        };
        let mut word = Vec::new();
        let mut coeff = self.one.clone();
        for &g in w.iter().rev() {
            let (h, c) = img(g);
            word.push(h);
            coeff = &coeff * &c;
        }
        self.normalize(Combo::from([(word, coeff)]))
    }

    /// λ(bᵐcᵐ) = (−1)ᵐ(q − q⁻¹)/(q^{m+1} − q^{−m−1}).
    fn lambda(&self, x: &Combo) -> Scalar {
        let mut total = self.one.field().zero();
        for (w, c) in x {
            let m = w.iter().filter(|&&g| g == b'b').count();
            if w.len() != 2 * m || w.iter().filter(|&&g| g == b'c').count() != m {
                continue;
            }
            let mm = m as i64;
            let num = &self.q - &self.q_inv;
            let den = &self.qp(mm + 1) - &self.qp(-mm - 1);
            let sign = if m % 2 == 0 { self.one.clone() } else { -&self.one };
            total = &total + &(&(c * &sign) * &(&num * &den.inv().unwrap()));
        }
        total
    }
}

fn monomial_of(w: &[u8]) -> PbwMonomial {
    let n = |g: u8| w.iter().filter(|&&x| x == g).count() as u32;
    PbwMonomial::new(n(b'a'), n(b'b'), n(b'c'), n(b'd')).expect("normal word")
}

fn to_element(x: &Combo) -> QslElement {
    let mut e = QslElement::zero();
    for (w, c) in x {
        e.add_term(monomial_of(w), c.clone());
    }
    e
}

fn to_tensor(x: &BTreeMap<(Word, Word), Scalar>) -> QslTensor {
    x.iter()
        .map(|((l, r), c)| ((monomial_of(l), monomial_of(r)), c.clone()))
        .collect()
}

fn words(max: usize) -> Vec<Word> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w: &Word| b"abcd".iter().map(move |&g| [w.as_slice(), &[g]].concat()))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn gens(w: &[u8]) -> Vec<Generator> {
    w.iter().map(|&g| Generator::from_char(g as char).unwrap()).collect()
}

#[test]
fn normal_forms_agree_on_all_words_up_to_length_five() {
    let (h, m) = (Qsl2::new(), Model::new());
    for w in words(5) {
        assert_eq!(h.normal_form(&gens(&w)), to_element(&m.word(&w)), "{}", String::from_utf8_lossy(&w));
    }
}

#[test]
fn relation_examples() {
    let (h, m) = (Qsl2::new(), Model::new());
    let q = h.q().clone();
    let one = h.field().one();
    let bc = PbwMonomial::new(0, 1, 1, 0).unwrap();
    let mut da = QslElement::monomial(PbwMonomial::ONE, one.clone());
    da.add_term(bc, q.clone());
    assert_eq!(to_element(&m.word(b"da")), da);
    let mut ad = QslElement::monomial(PbwMonomial::ONE, one.clone());
    ad.add_term(bc, q.inv().unwrap());
    assert_eq!(to_element(&m.word(b"ad")), ad);
    assert_eq!(
        to_element(&m.word(b"ba")),
        QslElement::monomial(PbwMonomial::new(1, 1, 0, 0).unwrap(), q.clone())
    );
}

#[test]
fn products_of_normal_forms_agree() {
    let (h, m) = (Qsl2::new(), Model::new());
    let ws = words(3);
    for u in ws.iter().step_by(3) {
        for v in ws.iter().step_by(5) {
            let lhs = h.mul(&h.normal_form(&gens(u)), &h.normal_form(&gens(v)));
            assert_eq!(lhs, to_element(&m.mul(&m.word(u), &m.word(v))));
        }
    }
}

#[test]
fn coproduct_agrees_up_to_length_three() {
    let (h, m) = (Qsl2::new(), Model::new());
    for w in words(3) {
        assert_eq!(h.comul(&h.normal_form(&gens(&w))), to_tensor(&m.comul(&w)), "{w:?}");
    }
}

#[test]
fn antipode_and_inverse_agree_up_to_length_three() {
    let (h, m) = (Qsl2::new(), Model::new());
    for w in words(3) {
        let x = h.normal_form(&gens(&w));
        assert_eq!(h.antipode(&x, 1), to_element(&m.antipode(&w, false)), "{w:?}");
        assert_eq!(h.antipode(&x, -1), to_element(&m.antipode(&w, true)), "{w:?}");
    }
}

#[test]
fn counit_on_words() {
    let (h, m) = (Qsl2::new(), Model::new());
    for w in words(4) {
        // ε(a) = ε(d) = 1, ε(b) = ε(c) = 0, so ε(word) = [no b or c]
        let e = if w.iter().all(|&g| g == b'a' || g == b'd') { m.one.clone() } else { m.one.field().zero() };
        assert_eq!(h.counit(&h.normal_form(&gens(&w))), e, "{w:?}");
    }
}

#[test]
fn lambda_values() {
    let (h, m) = (Qsl2::new(), Model::new());
    let q2 = m.qp(2);
    assert_eq!(m.lambda(&m.word(b"da")), (&q2 + &m.one).inv().unwrap());
    assert_eq!(m.lambda(&m.word(b"bc")), -&(&m.q + &m.q_inv).inv().unwrap());
    for w in words(4) {
        assert_eq!(h.lambda(&h.normal_form(&gens(&w))), m.lambda(&m.word(&w)), "{w:?}");
    }
}

#[test]
fn nakayama_identities_in_the_model() {
    let m = Model::new();
    let chi = [(b'a', m.qp(-2)), (b'b', m.one.clone()), (b'c', m.one.clone()), (b'd', m.qp(2))];
    for (g, s) in chi {
        let u = Combo::from([(vec![g], m.one.clone())]);
        let chi_u = Combo::from([(vec![g], s)]);
        for y in words(4) {
            let y = m.word(&y);
            assert_eq!(m.lambda(&m.mul(&y, &u)), m.lambda(&m.mul(&chi_u, &y)), "χ({})", g as char);
        }
    }
}

#[test]
fn antipode_squared_on_b() {
    let m = Model::new();
    let s2 = m
        .antipode(b"b", false)
        .into_iter()
        .map(|(w, c)| {
            let once = m.antipode(&w, false);
            once.into_iter().map(move |(v, d)| (v, &c * &d)).collect::<Vec<_>>()
        })
        .next()
        .unwrap();
    assert_eq!(s2, vec![(b"b".to_vec(), m.qp(2))]);
}
