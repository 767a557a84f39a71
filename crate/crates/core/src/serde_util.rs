use std::fmt::Display;

use serde::Serializer;

/// Serializes a value through its `Display` form, for integers that do not
/// fit in a JSON number.
pub(crate) fn as_string<T: Display, S: Serializer>(v: &T, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(v)
}
