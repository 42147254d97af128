#ifndef RB_SHUFFLE_H
#define RB_SHUFFLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define RB_OK 0

#define RB_PARSE_ERROR 1

#define RB_TYPE_ERROR 2

#define RB_ALGEBRA_ERROR 3

#define RB_NULL_POINTER 4

#define RB_INVALID_UTF8 5

#define RB_UNKNOWN_SUITE 6

#define RB_LAW_FAILED 7

#define RB_PANIC 8

// An element of a session's algebra.
typedef struct RbElement RbElement;

// An algebra together with the operators used by `P(..)` and `D(..)`.
typedef struct RbSession RbSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Opens a session on `handle` (e.g. `"sha(poly(x,y))"`). `ring` is `"q"`,
// `"z"` or `"zmod:M"` and `lambda` a scalar literal; either may be null for
// the rationals and weight 0.
//
// # Safety
// String arguments must be null or nul-terminated; `out` must be writable.
int rb_session_new(const char *handle,
                   const char *ring,
                   const char *lambda,
                   struct RbSession **out);

// # Safety
// `s` must come from `rb_session_new` and not be used afterwards.
void rb_session_free(struct RbSession *s);

// Evaluates an expression such as `"P(x # y) * (1 # x)"`.
//
// # Safety
// `s` must be a live session, `expr` nul-terminated and `out` writable.
int rb_eval(const struct RbSession *s, const char *expr, struct RbElement **out);

// # Safety
// `a` and `b` must be live elements and `out` writable.
int rb_element_add(const struct RbElement *a, const struct RbElement *b, struct RbElement **out);

// # Safety
// `a` and `b` must be live elements and `out` writable.
int rb_element_mul(const struct RbElement *a, const struct RbElement *b, struct RbElement **out);

// Writes 1 to `out` when `a = b` at their common precision, else 0.
//
// # Safety
// `a` and `b` must be live elements and `out` writable.
int rb_element_equal(const struct RbElement *a, const struct RbElement *b, int *out);

// Text form, readable back by `rb_eval`.
//
// # Safety
// `e` must be a live element and `out` writable.
int rb_element_to_string(const struct RbElement *e, char **out);

// # Safety
// `e` must be a live element and `out` writable.
int rb_element_to_json(const struct RbElement *e, char **out);

// # Safety
// `e` must come from this library and not be used afterwards.
void rb_element_free(struct RbElement *e);

// Runs one law suite (or all, when `suite` is null) over the session's
// ring and writes the JSON report to `out`. Returns `RB_LAW_FAILED` when a
// suite fails; the report is written either way. `samples < 0` keeps the
// default sample counts.
//
// # Safety
// `s` must be a live session, `suite` null or nul-terminated, `out`
// writable.
int rb_check(const struct RbSession *s,
             const char *suite,
             uint64_t seed,
             int64_t samples,
             char **out);

// Message for the last failure on this thread, or an empty string. The
// pointer stays valid until the next library call on this thread.
const char *rb_last_error(void);

// # Safety
// `p` must be null or a string returned by this library.
void rb_string_free(char *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RB_SHUFFLE_H */
