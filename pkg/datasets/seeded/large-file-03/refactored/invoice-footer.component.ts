import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-invoice-footer', template: `<p>{{ title }}</p>` })
export class InvoiceFooterComponent { title = 'Invoice footer'; }
