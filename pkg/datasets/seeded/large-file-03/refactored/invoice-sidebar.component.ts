import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-invoice-sidebar', template: `<p>{{ title }}</p>` })
export class InvoiceSidebarComponent { title = 'Invoice sidebar'; }
