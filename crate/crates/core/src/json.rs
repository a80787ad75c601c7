// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

/// Pretty JSON with object keys in sorted order.
pub fn to_sorted_json<T: Serialize + ?Sized>(value: &T) -> String {
    let tree = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&tree).expect("values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn keys_are_sorted() {
        let m: HashMap<&str, i32> = [("b", 1), ("a", 2), ("c", 3)].into();
        let s = to_sorted_json(&m);
        let (a, b, c) = (
            s.find("\"a\"").unwrap(),
            s.find("\"b\"").unwrap(),
            s.find("\"c\"").unwrap(),
        );
        assert!(a < b && b < c);
    }
}
