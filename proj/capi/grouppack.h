#ifndef GROUPPACK_H
#define GROUPPACK_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by gp_run. */
#define GP_OK 0
#define GP_ERR_PARSE 1       /* malformed JSON or missing fields */
#define GP_ERR_INVALID 2     /* well-formed but inconsistent input */
#define GP_ERR_UNSUPPORTED 3 /* command or group outside the library */
#define GP_ERR_LIMIT 4       /* a search or solver budget was exhausted */
#define GP_ERR_INTERNAL 5

/* Values of gp_result_decision. */
#define GP_DECISION_YES 0
#define GP_DECISION_NO 1
#define GP_DECISION_UNKNOWN 2 /* also: no-within-box oracle answers */
#define GP_DECISION_NONE (-1) /* emitters and error results */

typedef struct gp_result gp_result;

/* Run one request. request_json is a JSON document {"command": ..., ...}
   using the same schema as the CLI subcommand of that name. Returns a GP_*
   status. When out is nonnull, *out is always set: on success it holds the
   result document, on failure {"error": message, "code": status}. Free it
   with gp_result_free. */
int gp_run(const char* request_json, gp_result** out);

/* JSON text of the result; owned by the result object. */
const char* gp_result_json(const gp_result* r);

/* GP_DECISION_* summary of the result's "decision" field. */
int gp_result_decision(const gp_result* r);

void gp_result_free(gp_result* r);

const char* gp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GROUPPACK_H */
