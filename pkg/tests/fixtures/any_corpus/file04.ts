export const g = (data: any) => data;
/* block comment: any any any */
