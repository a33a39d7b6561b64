//! Small helpers shared by the text and JSON renderers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

/// Largest magnitude a JSON consumer can hold exactly in a double.
const SAFE_INT: i64 = 1 << 53;

/// Numbers within ±2^53 stay numbers; anything larger becomes a decimal string.
pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) if (-SAFE_INT..=SAFE_INT).contains(&v) => Value::from(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn bigs(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(big).collect())
}

pub fn tuple<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}
