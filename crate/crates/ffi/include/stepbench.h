/* C ABI for the stepbench benchmark pipeline. */

#ifndef STEPBENCH_H
#define STEPBENCH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of a C-ABI call.
 */
typedef enum SbStatus {
  /**
   * Success.
   */
  SbOk = 0,
  /**
   * A required pointer argument was NULL.
   */
  SbNullPointer = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SbInvalidUtf8 = 2,
  /**
   * Unknown task id or prompt mode.
   */
  SbUnknownTask = 3,
  /**
   * Argument outside the admitted grid (size, seed, keyword).
   */
  SbInvalidArgument = 4,
  /**
   * Rendering failed.
   */
  SbRenderError = 5,
  /**
   * Oracle or scoring failure.
   */
  SbPipelineError = 6,
} SbStatus;

/**
 * Opaque benchmark instance: payload plus gold answer and gold trace.
 */
typedef struct SbInstance SbInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * # Safety
 * `ptr` must be NULL or a pointer previously returned by this library's
 * string-producing functions, not yet freed.
 */
void sb_string_free(char *ptr);

/**
 * Returns the library version as a static string (do not free).
 */
const char *sb_version(void);

/**
 * Returns and clears the per-thread error message from the last failed
 * call, or NULL when none is pending. Free with [`sb_string_free`].
 */
char *sb_last_error_message(void);

/**
 * Writes a JSON array describing all 32 registered tasks (id, family,
 * admitted sizes, comparison mode, trace variable).
 *
 * # Safety
 * `out_json` must be a valid pointer to writable memory.
 */
enum SbStatus sb_tasks_json(char **out_json);

/**
 * Samples the deterministic instance of `task` for `(size, seed)` and
 * returns an owned handle.
 *
 * # Safety
 * `task` must be a NUL-terminated string and `out_instance` a valid
 * pointer; the handle must be released with [`sb_instance_free`].
 */
enum SbStatus sb_instance_sample(const char *task,
                                 uintptr_t size,
                                 uint64_t seed,
                                 struct SbInstance **out_instance);

/**
 * # Safety
 * `instance` must be NULL or a handle from [`sb_instance_sample`], not
 * yet freed.
 */
void sb_instance_free(struct SbInstance *instance);

/**
 * Serializes the instance (task, seed, size, payload, gold answer, gold
 * trace) as JSON.
 *
 * # Safety
 * `instance` must be a live handle and `out_json` a valid pointer.
 */
enum SbStatus sb_instance_json(const struct SbInstance *instance, char **out_json);

/**
 * Renders the instance's prompt body for `mode` (`"nl"` or `"code"`).
 *
 * # Safety
 * `instance` must be a live handle; `mode` a NUL-terminated string;
 * `out_body` a valid pointer.
 */
enum SbStatus sb_render(const struct SbInstance *instance, const char *mode, char **out_body);

/**
 * Writes the oracle-echo response for the instance: the gold trace and
 * answer serialized in the task's expected textual step format.
 *
 * # Safety
 * `instance` must be a live handle and `out_text` a valid pointer.
 */
enum SbStatus sb_oracle_echo(const struct SbInstance *instance, char **out_text);

/**
 * Scores `response_text` against the instance's gold data; writes a JSON
 * object with `final_correct`, `extraction_failed`,
 * `intermediate_correct` and `process`.
 *
 * # Safety
 * `instance` must be a live handle; `response_text` a NUL-terminated
 * string; `out_json` a valid pointer.
 */
enum SbStatus sb_score_response(const struct SbInstance *instance,
                                const char *response_text,
                                char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STEPBENCH_H */
