// SPDX-License-Identifier: Apache-2.0

pub mod algebra;
pub mod curve;
pub mod loops;
pub mod map;
