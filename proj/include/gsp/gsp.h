#ifndef GSP_GSP_H
#define GSP_GSP_H

/* C interface to the GSp4 x GL2 toolkit.
 * Every operation takes a JSON object and returns a JSON object; rationals travel as "num/den". */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GSP_API __declspec(dllexport)
#else
#define GSP_API __attribute__((visibility("default")))
#endif

typedef struct gsp_ctx gsp_ctx;

enum gsp_status {
  GSP_OK = 0,
  GSP_ERR_INPUT = 1,   /* malformed payload, unknown op */
  GSP_ERR_DOMAIN = 2,  /* pole, constraint violation, outside the mathematical domain */
  GSP_ERR_INTERNAL = 3
};

GSP_API gsp_ctx* gsp_ctx_create(void);
GSP_API void gsp_ctx_destroy(gsp_ctx* ctx);

/* Runs op ("group.cmd") on json_in. On success *json_out points at the result;
 * the buffer belongs to ctx and stays valid until the next call on ctx. */
GSP_API int gsp_call(gsp_ctx* ctx, const char* op, const char* json_in, const char** json_out);

/* Message for the last failed call on ctx, or "". */
GSP_API const char* gsp_last_error(const gsp_ctx* ctx);

GSP_API const char* gsp_version(void);

/* JSON array of {"op", "summary"}; static storage. */
GSP_API const char* gsp_list_ops(void);

#ifdef __cplusplus
}
#endif

#endif
