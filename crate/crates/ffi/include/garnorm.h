#ifndef GARNORM_H
#define GARNORM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GarnormStatus {
  GARNORM_STATUS_OK = 0,
  // A predicate evaluated to false.
  GARNORM_STATUS_FALSE = 1,
  GARNORM_STATUS_NULL_POINTER = 2,
  GARNORM_STATUS_INVALID_UTF8 = 3,
  GARNORM_STATUS_PARSE = 4,
  GARNORM_STATUS_INVALID_INPUT = 5,
  GARNORM_STATUS_BUDGET_EXHAUSTED = 6,
  GARNORM_STATUS_PANIC = 7,
} GarnormStatus;

// Opaque Mealy machine.
typedef struct GarnormMachine GarnormMachine;

// Opaque normalisation table.
typedef struct GarnormTable GarnormTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread. Valid until the
// next failing call on the same thread; never null.
const char *garnorm_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void garnorm_string_free(char *s);

// Parses a table in the text format.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum GarnormStatus garnorm_table_parse(const char *src, struct GarnormTable **out);

// Builds the greedy table of a presentation in the text format.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum GarnormStatus garnorm_table_from_presentation(const char *src, struct GarnormTable **out);

// Looks up a gallery table, such as `bicyclic` or `finite:Z/3`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be writable.
enum GarnormStatus garnorm_table_gallery(const char *name, struct GarnormTable **out);

// # Safety
// `t` must come from this library and not have been freed. Null is ignored.
void garnorm_table_free(struct GarnormTable *t);

// Canonical text form of a table.
//
// # Safety
// `t` must be a live table; `out` must be writable.
enum GarnormStatus garnorm_table_to_text(const struct GarnormTable *t, char **out);

// Normal form of a word given as space-separated names, or unspaced over
// a single-character alphabet.
//
// # Safety
// `t` must be a live table, `word` a NUL-terminated string, `out` writable.
enum GarnormStatus garnorm_table_normalize(const struct GarnormTable *t,
                                           const char *word,
                                           char **out);

// Breadth of a table. An unbounded component is reported as -1.
//
// # Safety
// `t` must be a live table; `d` and `p` must be writable.
enum GarnormStatus garnorm_table_breadth(const struct GarnormTable *t, int *d, int *p);

// `GARNORM_STATUS_OK` when the breadth satisfies d <= 4 and p <= 3,
// `GARNORM_STATUS_FALSE` otherwise.
//
// # Safety
// `t` must be a live table.
enum GarnormStatus garnorm_table_home(const struct GarnormTable *t);

// `GARNORM_STATUS_OK` when the unit condition holds.
//
// # Safety
// `t` must be a live table.
enum GarnormStatus garnorm_table_unit_condition(const struct GarnormTable *t);

// The Mealy machine of a table.
//
// # Safety
// `t` must be a live table; `out` must be writable.
enum GarnormStatus garnorm_table_mealy(const struct GarnormTable *t, struct GarnormMachine **out);

// The Thurston transducer of a table.
//
// # Safety
// `t` must be a live table; `out` must be writable.
enum GarnormStatus garnorm_table_thurston(const struct GarnormTable *t,
                                          struct GarnormMachine **out);

// Parses a machine in the text format.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum GarnormStatus garnorm_machine_parse(const char *src, struct GarnormMachine **out);

// The machine of a gallery entry; for tables, their Mealy machine.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be writable.
enum GarnormStatus garnorm_machine_gallery(const char *name, struct GarnormMachine **out);

// # Safety
// `m` must come from this library and not have been freed. Null is ignored.
void garnorm_machine_free(struct GarnormMachine *m);

// Text form of a machine.
//
// # Safety
// `m` must be a live machine; `out` must be writable.
enum GarnormStatus garnorm_machine_to_text(const struct GarnormMachine *m, char **out);

// The dual machine, exchanging states and letters.
//
// # Safety
// `m` must be a live machine; `out` must be writable.
enum GarnormStatus garnorm_machine_dual(const struct GarnormMachine *m,
                                        struct GarnormMachine **out);

// Runs from `state` on `word`, returning the output word and final state.
//
// # Safety
// `m` must be a live machine, `state` and `word` NUL-terminated strings,
// `output` and `final_state` writable.
enum GarnormStatus garnorm_machine_run(const struct GarnormMachine *m,
                                       const char *state,
                                       const char *word,
                                       char **output,
                                       char **final_state);

// `GARNORM_STATUS_OK` when the state words `u` and `v` induce the same map,
// `GARNORM_STATUS_FALSE` otherwise.
//
// # Safety
// `m` must be a live machine; `u` and `v` NUL-terminated strings.
enum GarnormStatus garnorm_machine_action_equal(const struct GarnormMachine *m,
                                                const char *u,
                                                const char *v);

// DOT rendering of a machine.
//
// # Safety
// `m` must be a live machine, `name` a NUL-terminated string, `out` writable.
enum GarnormStatus garnorm_machine_dot(const struct GarnormMachine *m,
                                       const char *name,
                                       char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GARNORM_H */
